#ifndef CCWB_EQUIV_HPP
#define CCWB_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccwb/cosets.hpp"
#include "ccwb/poly.hpp"

namespace ccwb {

// Witness for an exponent bijection z -> e*z + b (mod M) between two
// coset multisets; e is a unit mod M and e + b = 1 (mod r) so that the
// exponent list 1 + i*r stays stable.
struct LinearMapWitness {
    long long e = 1;
    long long b = 0;
};

enum class EquivStage { DegreeSum, Distribution, MapSearch };

std::string stage_name(EquivStage s);

// Verdict of the coset equivalence test.  true is a sufficient condition
// for code equivalence; false only means no map was found.
struct EquivVerdict {
    bool equivalent = false;
    std::optional<LinearMapWitness> witness;
    EquivStage stage = EquivStage::DegreeSum;
};

// Search for a map sending ms1 onto ms2.  Caller guarantees equal degree
// sums and distributions (rechecked cheaply via support sizes).
std::optional<LinearMapWitness> exists_linear_map(const CCParams& P, const CosetMultiset& ms1,
                                                  const CosetMultiset& ms2);

// The three-stage test on precomputed signatures.
EquivVerdict coset_equiv(const CCParams& P, const CosetMultiset& ms1, const CosetMultiset& ms2);

// Full pipeline from generator polynomials: builds the extension field,
// pins delta, extracts signatures and runs the staged test.  Throws if a
// generator does not divide x^n - a.
EquivVerdict cc_coset_eq(const Field& F, int n, fe a, const Poly& g1, const Poly& g2);

struct PartitionOptions {
    // Refuse instances with more nontrivial divisors than this unless
    // overridden; class bookkeeping holds one hash entry per divisor.
    u128 max_total = u128(1) << 25;
    bool override_cap = false;
    bool materialize = true;     // emit generator polynomials
    long long relabel_u = 1;     // replace delta by delta^u (testing hook; u = 1 mod r, unit mod M)
};

struct PartitionResult {
    CCParams params;
    u128 total = 0;      // nontrivial divisors of x^n - a
    u128 new_count = 0;  // detected equivalence classes
    std::vector<CosetMultiset> representatives;  // admission order
    std::vector<Poly> generators;                // monic, same order (when materialized)
};

// Partition all nontrivial constacyclic codes of (q, n, a) into detected
// equivalence classes.  Deterministic output for any thread count.
PartitionResult partition(const Field& F, int n, fe a, const PartitionOptions& opt = {});

}  // namespace ccwb

#endif
