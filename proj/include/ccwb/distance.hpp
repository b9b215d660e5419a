#ifndef CCWB_DISTANCE_HPP
#define CCWB_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "ccwb/linear_code.hpp"

namespace ccwb {

struct DistanceResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    enum class Method { FullEnum, InfoSet } method = Method::FullEnum;

    int d() const { return lower; }  // best certified value
};

// --- enumeration kernels ------------------------------------------------
//
// The OpenMP kernels chunk the message space over threads and merge with
// associative reductions, so results are independent of thread count.
// The *_serial variants recompute every codeword from scratch; they are
// the reference implementations the tests and the benchmark compare
// against.

// counts[w] = number of codewords of Hamming weight w (q^k of them total)
std::vector<unsigned long long> weight_histogram(const LinearCode& C);
std::vector<unsigned long long> weight_histogram_serial(const LinearCode& C);

// minimum nonzero codeword weight by full enumeration (k >= 1)
int min_weight_full(const LinearCode& C);
int min_weight_full_serial(const LinearCode& C);

// --- distance drivers ---------------------------------------------------

struct DistanceOptions {
    unsigned long long full_enum_cap = 1ull << 26;  // max q^k for full enumeration
    unsigned long long infoset_budget = 20'000'000;  // codeword budget for the bound search
};

// Exact distance when q^k fits the cap or the information-set bounds
// meet; otherwise the best (lower, upper) pair found within budget.
DistanceResult min_distance(const LinearCode& C, const DistanceOptions& opt = {});

// Brouwer-Zimmermann style bound search over disjoint information sets.
DistanceResult min_distance_infoset(const LinearCode& C, unsigned long long budget);

std::vector<unsigned long long> weight_distribution(const LinearCode& C,
                                                    unsigned long long cap = 1ull << 26);

unsigned long long code_size(const LinearCode& C);  // q^k, saturating at 2^63

}  // namespace ccwb

#endif
