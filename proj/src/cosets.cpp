#include "ccwb/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ccwb/numtheory.hpp"

namespace ccwb {

CCParams cc_params(const Field& F, int n, fe a) {
    if (a == 0) throw std::invalid_argument("shift constant must be nonzero");
    if (n < 2) throw std::invalid_argument("length must be at least 2");
    CCParams P;
    P.F = &F;
    P.n = n;
    P.a = a;
    P.r = element_order(F, a);
    P.nprime = n;
    P.t = 0;
    P.pt = 1;
    while (P.nprime % F.p() == 0) {
        P.nprime /= F.p();
        P.t += 1;
        P.pt *= F.p();
    }
    P.M = (long long)P.nprime * P.r;
    P.b = pt_root(F, a, P.pt);

    P.elements.resize(P.nprime);
    for (int i = 0; i < P.nprime; ++i) P.elements[i] = int((1 + (long long)i * P.r) % P.M);
    std::sort(P.elements.begin(), P.elements.end());

    P.coset_of.assign(P.M, -1);
    for (int z : P.elements) {
        if (P.coset_of[z] != -1) continue;
        std::vector<int> orbit;
        long long cur = z;
        do {
            orbit.push_back(int(cur));
            P.coset_of[cur] = int(P.cosets.size());
            cur = (cur * F.q()) % P.M;
        } while (cur != z);
        std::sort(orbit.begin(), orbit.end());
        P.cosets.push_back(std::move(orbit));
    }
    // elements are scanned ascending, so cosets are already ordered by
    // smallest member
    return P;
}

u128 total_divisors(const CCParams& P) {
    u128 r = 1;
    for (size_t i = 0; i < P.cosets.size(); ++i) r *= (u128)(P.pt + 1);
    return r;
}

u128 total_nontrivial_divisors(const CCParams& P) { return total_divisors(P) - 2; }

ExtField coset_extension_field(const CCParams& P) {
    long long s = mult_order_mod(P.F->q(), P.M);
    return ExtField(*P.F, int(s));
}

Delta find_delta(const CCParams& P, const ExtField& EF) {
    if (EF.unit_order() % (u128)P.M != 0)
        throw std::invalid_argument("extension field does not host the required roots of unity");
    u128 step = EF.unit_order() / (u128)P.M;
    ExtElem w = EF.pow(EF.gen(), step);  // order exactly M
    ExtElem b_emb = EF.embed(P.b);
    for (long long u = 1; u <= P.M; ++u) {
        if (std::gcd(u, P.M) != 1) continue;
        ExtElem cand = EF.pow(w, (u128)u);
        if (EF.pow(cand, (u128)P.nprime) == b_emb) return {cand, step * (u128)u};
    }
    throw std::logic_error("no suitable root of unity found");  // ruled out by construction
}

std::vector<ExtElem> delta_powers(const CCParams& P, const ExtField& EF, const Delta& d) {
    std::vector<ExtElem> pw(P.M);
    pw[0] = EF.one();
    for (long long i = 1; i < P.M; ++i) pw[i] = EF.mul(pw[i - 1], d.value);
    return pw;
}

long long multiset_degree(const CCParams& P, const CosetMultiset& ms) {
    long long d = 0;
    for (size_t i = 0; i < ms.mult.size(); ++i) d += (long long)ms.mult[i] * P.cosets[i].size();
    return d;
}

CosetMultiset signature(const CCParams& P, const ExtField& EF, const std::vector<ExtElem>& dpow,
                        const Poly& g) {
    if (g.F != P.F) throw std::invalid_argument("polynomial over wrong field");
    if (!poly_divides(g, poly_xn_minus_a(*P.F, P.n, P.a)))
        throw std::invalid_argument("polynomial does not divide x^n - a");

    CosetMultiset ms;
    ms.mult.assign(P.cosets.size(), 0);
    std::vector<int> per_exp(P.M, 0);
    for (int z : P.elements) per_exp[z] = root_multiplicity(g, EF, dpow[z]);

    for (size_t ci = 0; ci < P.cosets.size(); ++ci) {
        int m0 = per_exp[P.cosets[ci][0]];
        for (int z : P.cosets[ci]) {
            if (per_exp[z] != m0)
                throw std::logic_error("signature not uniform on a cyclotomic coset");
        }
        ms.mult[ci] = m0;
    }
    if (multiset_degree(P, ms) != g.deg())
        throw std::logic_error("signature degree accounting failed");
    return ms;
}

Poly multiset_to_poly(const CCParams& P, const ExtField& EF, const std::vector<ExtElem>& dpow,
                      const CosetMultiset& ms) {
    std::vector<ExtElem> acc{EF.one()};
    for (size_t ci = 0; ci < P.cosets.size(); ++ci) {
        for (int rep = 0; rep < ms.mult[ci]; ++rep) {
            for (int z : P.cosets[ci]) {
                // multiply acc by (x - delta^z)
                std::vector<ExtElem> nxt(acc.size() + 1, EF.zero());
                ExtElem mr = EF.neg(dpow[z]);
                for (size_t i = 0; i < acc.size(); ++i) {
                    nxt[i + 1] = EF.add(nxt[i + 1], acc[i]);
                    nxt[i] = EF.add(nxt[i], EF.mul(mr, acc[i]));
                }
                acc = std::move(nxt);
            }
        }
    }
    std::vector<fe> coeffs(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        auto pr = EF.project(acc[i]);
        if (!pr) throw std::invalid_argument("multiset is not closed under cyclotomic cosets");
        coeffs[i] = *pr;
    }
    return Poly(*P.F, std::move(coeffs));
}

std::vector<std::pair<int, int>> distribution(const CCParams& P, const CosetMultiset& ms) {
    std::vector<std::pair<int, int>> d;
    for (size_t ci = 0; ci < ms.mult.size(); ++ci)
        if (ms.mult[ci] > 0) d.emplace_back(int(P.cosets[ci].size()), ms.mult[ci]);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace ccwb
