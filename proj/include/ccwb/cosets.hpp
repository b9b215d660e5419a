#ifndef CCWB_COSETS_HPP
#define CCWB_COSETS_HPP

#include <memory>
#include <vector>

#include "ccwb/ext_field.hpp"
#include "ccwb/field.hpp"
#include "ccwb/poly.hpp"

namespace ccwb {

// Context for constacyclic codes of length n with shift constant a over
// GF(q):  r = ord(a),  n = n' p^t with gcd(n', p) = 1,  M = n' r, and
// b the p^t-th root of a (so x^n - a = (x^n' - b)^(p^t)).
struct CCParams {
    const Field* F = nullptr;
    int n = 0;
    fe a = 0;
    int r = 0;
    int nprime = 0;
    int t = 0;
    long long pt = 1;
    long long M = 0;
    fe b = 0;

    // exponents 1 + i*r mod M for i = 0..n'-1, ascending
    std::vector<int> elements;
    // q-cyclotomic cosets of the exponent list, members ascending,
    // cosets ordered by smallest member
    std::vector<std::vector<int>> cosets;
    // exponent -> index into cosets (-1 off the exponent list)
    std::vector<int> coset_of;
};

CCParams cc_params(const Field& F, int n, fe a);

// orbits of the exponent list under multiplication by q mod M, ordered
// by smallest member (computed once inside cc_params)
inline const std::vector<std::vector<int>>& cyclotomic_cosets(const CCParams& P) {
    return P.cosets;
}

u128 total_divisors(const CCParams& P);            // (p^t+1)^#cosets
u128 total_nontrivial_divisors(const CCParams& P);  // the above minus 2

// Extension field hosting the M-th roots of unity.
ExtField coset_extension_field(const CCParams& P);

struct Delta {
    ExtElem value;
    u128 gen_exponent = 0;  // delta = A^gen_exponent in the extension field
};

// The pinned M-th root of unity: order exactly M and delta^n' = b, at the
// smallest possible power of the extension field's primitive element.
Delta find_delta(const CCParams& P, const ExtField& EF);

// Precomputed powers delta^0 .. delta^(M-1).
std::vector<ExtElem> delta_powers(const CCParams& P, const ExtField& EF, const Delta& d);

// Multiplicity per coset (uniform on each coset); exponent-level view via
// CCParams::coset_of.  Total multiplicity equals the degree of the
// corresponding divisor of x^n - a.
struct CosetMultiset {
    std::vector<int> mult;  // one entry per coset, in [0, p^t]

    bool operator==(const CosetMultiset&) const = default;
};

long long multiset_degree(const CCParams& P, const CosetMultiset& ms);

// Root-multiplicity signature of a divisor g of x^n - a (checked).
CosetMultiset signature(const CCParams& P, const ExtField& EF, const std::vector<ExtElem>& dpow,
                        const Poly& g);

// The P map: product of (x - delta^z)^mult over the multiset, with all
// coefficients landing back in the base field (throws otherwise).
Poly multiset_to_poly(const CCParams& P, const ExtField& EF, const std::vector<ExtElem>& dpow,
                      const CosetMultiset& ms);

// Multiset of (coset size, multiplicity) pairs over the support, as a
// canonical sorted vector; equality is a necessary condition for an
// exponent map e*z + b between two signatures.
std::vector<std::pair<int, int>> distribution(const CCParams& P, const CosetMultiset& ms);

}  // namespace ccwb

#endif
