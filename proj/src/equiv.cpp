#include "ccwb/equiv.hpp"

#include <algorithm>
#include <unordered_set>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccwb {

std::string stage_name(EquivStage s) {
    switch (s) {
        case EquivStage::DegreeSum: return "degree-sum";
        case EquivStage::Distribution: return "distribution";
        case EquivStage::MapSearch: return "map-search";
    }
    return "?";
}

namespace {

std::vector<int> units_mod(long long M) {
    std::vector<int> u;
    for (long long e = 1; e < M; ++e)
        if (std::gcd(e, M) == 1) u.push_back(int(e));
    if (M == 1) u.push_back(0);  // the unique residue mod 1
    return u;
}

// Core search for (e, b) with e a unit, e + b = 1 (mod r) and
// mult2[e*z + b] = mult1[z] for every exponent z.  Degree sums must
// already agree; support sizes are then forced equal, so verifying the
// support of ms1 maps onto matching multiplicities suffices.
std::optional<LinearMapWitness> find_map(const CCParams& P, const std::vector<int>& units,
                                         const CosetMultiset& ms1, const CosetMultiset& ms2) {
    const long long M = P.M;
    const int r = P.r;

    // Empty multisets are identical.
    bool any1 = false;
    for (int m : ms1.mult) any1 |= (m > 0);
    if (!any1) return LinearMapWitness{1, 0};

    // Anchor: the support exponent of ms1 whose multiplicity class is the
    // rarest in ms2 (fewest candidate images).
    std::vector<long long> class_count(int(P.pt) + 1, 0);
    for (size_t ci = 0; ci < ms2.mult.size(); ++ci)
        if (ms2.mult[ci] > 0) class_count[ms2.mult[ci]] += (long long)P.cosets[ci].size();

    int z1 = -1;
    long long best = -1;
    for (size_t ci = 0; ci < ms1.mult.size(); ++ci) {
        int m = ms1.mult[ci];
        if (m == 0) continue;
        if (class_count[m] == 0) return std::nullopt;  // no possible image
        if (best < 0 || class_count[m] < best) {
            best = class_count[m];
            z1 = P.cosets[ci][0];
        }
    }
    const int v = ms1.mult[P.coset_of[z1]];

    std::vector<int> anchors;
    anchors.reserve(size_t(best));
    for (size_t ci = 0; ci < ms2.mult.size(); ++ci)
        if (ms2.mult[ci] == v)
            for (int z : P.cosets[ci]) anchors.push_back(z);

    for (int e : units) {
        long long ez1 = ((long long)e * z1) % M;
        for (int z2 : anchors) {
            long long b = ((z2 - ez1) % M + M) % M;
            if (((e + b) % r + r) % r != 1 % r) continue;
            bool ok = true;
            for (size_t ci = 0; ci < ms1.mult.size() && ok; ++ci) {
                int m = ms1.mult[ci];
                if (m == 0) continue;
                for (int z : P.cosets[ci]) {
                    long long img = ((long long)e * z + b) % M;
                    if (ms2.mult[P.coset_of[img]] != m) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return LinearMapWitness{e, b};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<LinearMapWitness> exists_linear_map(const CCParams& P, const CosetMultiset& ms1,
                                                  const CosetMultiset& ms2) {
    if (multiset_degree(P, ms1) != multiset_degree(P, ms2)) return std::nullopt;
    return find_map(P, units_mod(P.M), ms1, ms2);
}

EquivVerdict coset_equiv(const CCParams& P, const CosetMultiset& ms1, const CosetMultiset& ms2) {
    EquivVerdict v;
    if (multiset_degree(P, ms1) != multiset_degree(P, ms2)) {
        v.stage = EquivStage::DegreeSum;
        return v;
    }
    if (distribution(P, ms1) != distribution(P, ms2)) {
        v.stage = EquivStage::Distribution;
        return v;
    }
    v.stage = EquivStage::MapSearch;
    v.witness = find_map(P, units_mod(P.M), ms1, ms2);
    v.equivalent = v.witness.has_value();
    return v;
}

EquivVerdict cc_coset_eq(const Field& F, int n, fe a, const Poly& g1, const Poly& g2) {
    CCParams P = cc_params(F, n, a);
    Poly mod = poly_xn_minus_a(F, n, a);
    if (!poly_divides(g1, mod) || !poly_divides(g2, mod))
        throw std::invalid_argument("generator does not divide x^n - a");

    if (g1.deg() != g2.deg()) {
        EquivVerdict v;
        v.stage = EquivStage::DegreeSum;
        return v;
    }

    ExtField EF = coset_extension_field(P);
    Delta d = find_delta(P, EF);
    auto dpow = delta_powers(P, EF, d);
    CosetMultiset ms1 = signature(P, EF, dpow, g1);
    CosetMultiset ms2 = signature(P, EF, dpow, g2);
    return coset_equiv(P, ms1, ms2);
}

namespace {

// All multisets reachable from ms by an admissible map (e, b), encoded as
// base-(p^t+1) digit ids.  The map family is a group, so the reachable
// set is exactly the detected equivalence class of ms; enumerating it
// once per admitted representative lets every later candidate be decided
// by a single hash lookup.
std::vector<unsigned long long> class_orbit_ids(const CCParams& P, const std::vector<int>& units,
                                                const CosetMultiset& ms) {
    const long long M = P.M;
    const int nc = int(P.cosets.size());
    const int radix = int(P.pt) + 1;

    std::vector<unsigned long long> ids;
    std::vector<int> stamp(P.M, -1), val(P.M, 0), coset_stamp(nc, -1);
    std::vector<int> touched;
    touched.reserve(nc);
    int epoch = 0;

    std::vector<unsigned long long> pw(nc);
    for (int j = 0; j < nc; ++j) pw[j] = (j == 0) ? 1 : pw[j - 1] * radix;

    for (int e : units) {
        // b runs over residues with e + b = 1 (mod r); images then stay on
        // the exponent list
        const long long b_start = ((1 - e) % P.r + P.r) % P.r;
        for (long long b = b_start; b < M; b += P.r) {
            ++epoch;
            touched.clear();
            for (int ci = 0; ci < nc; ++ci) {
                int m = ms.mult[ci];
                if (m == 0) continue;
                for (int z : P.cosets[ci]) {
                    long long img = ((long long)e * z + b) % M;
                    stamp[img] = epoch;  // e is a unit, so images never collide
                    val[img] = m;
                    int tc = P.coset_of[img];
                    if (coset_stamp[tc] != epoch) {
                        coset_stamp[tc] = epoch;
                        touched.push_back(tc);
                    }
                }
            }
            // the image is a valid multiset iff every touched coset is
            // covered completely and uniformly
            bool ok = true;
            unsigned long long id = 0;
            for (int tc : touched) {
                int m0 = -1;
                for (int w : P.cosets[tc]) {
                    if (stamp[w] != epoch || (m0 >= 0 && val[w] != m0)) {
                        ok = false;
                        break;
                    }
                    m0 = val[w];
                }
                if (!ok) break;
                id += (unsigned long long)m0 * pw[tc];
            }
            if (ok) ids.push_back(id);
        }
    }
    return ids;
}

}  // namespace

PartitionResult partition(const Field& F, int n, fe a, const PartitionOptions& opt) {
    PartitionResult res;
    res.params = cc_params(F, n, a);
    const CCParams& P = res.params;
    res.total = total_nontrivial_divisors(P);

    if (res.total > opt.max_total && !opt.override_cap)
        throw std::runtime_error("partition instance exceeds the divisor cap; raise the cap to proceed");

    const auto units = units_mod(P.M);
    const int nc = int(P.cosets.size());
    const unsigned long long total = (unsigned long long)res.total;
    const int radix = int(P.pt) + 1;

    auto candidate_of = [&](unsigned long long id) {
        CosetMultiset ms;
        ms.mult.resize(nc);
        for (int j = 0; j < nc; ++j) {
            ms.mult[j] = int(id % radix);
            id /= radix;
        }
        return ms;
    };

    // Every id already covered by an admitted class.  Admission order is
    // the enumeration order, so the output is deterministic for any
    // thread count (the orbit is a set; how it is produced cannot matter).
    std::unordered_set<unsigned long long> covered;
    covered.reserve(size_t(std::min<unsigned long long>(total, 1u << 22)));

    for (unsigned long long id = 1; id <= total; ++id) {
        if (covered.count(id)) continue;
        CosetMultiset ms = candidate_of(id);
        res.representatives.push_back(ms);
        for (unsigned long long member : class_orbit_ids(P, units, ms)) covered.insert(member);
        if (!covered.count(id))
            throw std::logic_error("class orbit does not contain its own representative");
    }

    res.new_count = res.representatives.size();

    if (opt.materialize) {
        ExtField EF = coset_extension_field(P);
        Delta d = find_delta(P, EF);
        if (opt.relabel_u != 1) {
            if (std::gcd(opt.relabel_u, P.M) != 1 || opt.relabel_u % P.r != 1 % P.r)
                throw std::invalid_argument("relabel exponent must be a unit congruent to 1 mod r");
            d.value = EF.pow(d.value, (u128)opt.relabel_u);
            d.gen_exponent *= (u128)opt.relabel_u;
        }
        auto dpow = delta_powers(P, EF, d);
        res.generators.resize(res.representatives.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (long long i = 0; i < (long long)res.representatives.size(); ++i)
            res.generators[i] = multiset_to_poly(P, EF, dpow, res.representatives[i]);
    }
    return res;
}

}  // namespace ccwb
