#ifndef CCWB_LINEAR_CODE_HPP
#define CCWB_LINEAR_CODE_HPP

#include <optional>
#include <set>
#include <vector>

#include "ccwb/cosets.hpp"
#include "ccwb/matrix.hpp"
#include "ccwb/poly.hpp"

namespace ccwb {

// [n, k] linear code over a base field, held as a full-rank generator
// matrix together with its canonical RREF.  Code equality is RREF
// equality.  Immutable after construction.
class LinearCode {
  public:
    // Rows may be dependent; the dimension is the row-space rank.
    LinearCode(const Field& F, Mat rows);

    const Field& field() const { return *F_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const Mat& gen_matrix() const { return G_; }
    const Mat& rref_matrix() const { return rref_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const std::vector<fe>& word) const;
    bool contains_code(const LinearCode& sub) const;  // sub as a subcode of *this

    bool operator==(const LinearCode& o) const;

  private:
    const Field* F_;
    int n_, k_;
    Mat G_;      // as built (zero rows removed)
    Mat rref_;   // canonical form, k rows
    std::vector<int> pivots_;
};

// Code generated by g: rows x^i * g mod (x^n - a), i = 0..n-deg(g)-1.
// Checked: g divides x^n - a, deg g < n, and every row's constacyclic
// shift stays in the code.
LinearCode cc_code(const CCParams& P, const Poly& g);

LinearCode dual(const LinearCode& C);

int hull_dimension(const LinearCode& C);

struct PropertySet {
    bool self_orthogonal = false;
    bool dual_containing = false;
    bool lcd = false;
    bool self_dual = false;
    bool reversible = false;
    std::optional<bool> two_weight;   // unset when enumeration was capped
    std::set<int> nonzero_weights;    // filled when two_weight was evaluated
};

// Property battery.  two_weight requires q^k <= cap codewords; every other
// flag is pure linear algebra.
PropertySet classify(const LinearCode& C, unsigned long long cap = 1ull << 26);

}  // namespace ccwb

#endif
