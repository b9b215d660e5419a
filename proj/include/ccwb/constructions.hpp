#ifndef CCWB_CONSTRUCTIONS_HPP
#define CCWB_CONSTRUCTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "ccwb/bklc.hpp"
#include "ccwb/distance.hpp"
#include "ccwb/linear_code.hpp"

namespace ccwb {

// Appends an overall parity coordinate: every codeword's coordinates sum
// to zero in the result; length n+1, dimension unchanged.
LinearCode extend(const LinearCode& C);

// Deletes coordinate pos; the dimension drops only when some codeword was
// supported solely on pos.
LinearCode puncture(const LinearCode& C, int pos);

// Subcode of words zero at pos, with the coordinate deleted.  Generically
// [n-1, k-1]; k is preserved when the column was identically zero.
LinearCode shorten(const LinearCode& C, int pos);

using DistanceOracle = std::function<DistanceResult(const LinearCode&)>;

DistanceOracle default_oracle(const DistanceOptions& opt = {});

// Position maximizing the resulting (exact-or-lower-bound) distance,
// tie-break lowest index.  The position scan runs in parallel.
std::pair<LinearCode, int> best_puncture(const LinearCode& C, const DistanceOracle& oracle);
std::pair<LinearCode, int> best_shorten(const LinearCode& C, const DistanceOracle& oracle);

// Construction X: glue aux generators onto coset representatives of
// parent/subcode.  Requires subcode c parent (same length) and
// dim(parent) - dim(subcode) = dim(aux).  Result: [n + n_aux, dim(parent)]
// with guaranteed distance min(d_subcode, d_parent + d_aux).
LinearCode construction_x(const LinearCode& parent, const LinearCode& subcode,
                          const LinearCode& aux);

int construction_x_bound(int d_parent, int d_subcode, int d_aux);

struct Derivation {
    std::string name;   // root name plus one of e/p/s per step
    std::string ops;    // the suffix alone
    int n = 0, k = 0;
    DistanceResult dist;
    int table_d = 0;    // best known distance it beats
};

struct ModifyOptions {
    int max_depth = 12;
    int shorten_limit = 1;  // reserved: only single-position shortening is explored
    DistanceOracle oracle;  // defaults to min_distance with default options
    std::string root_name = "C1";
};

// Depth-first extend / best-puncture / best-shorten exploration.  A child
// is reported and recursed into iff its distance (exact or lower bound)
// strictly beats the table entry for its (q, n, k) and that (n, k) was
// not reported before.  Children are visited in e, p, s order, so the
// output is deterministic.
std::vector<Derivation> recursively_modify(const LinearCode& C, const BklcTable& table,
                                           const ModifyOptions& opt = {});

}  // namespace ccwb

#endif
