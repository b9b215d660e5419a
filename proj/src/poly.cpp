#include "ccwb/poly.hpp"

#include <stdexcept>

namespace ccwb {

namespace {

void trim(std::vector<fe>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_same_field(const Poly& f, const Poly& g) {
    if (f.F != g.F) throw std::invalid_argument("polynomials over different fields");
}

}  // namespace

Poly::Poly(const Field& f, std::vector<fe> coeffs) : F(&f), c(std::move(coeffs)) { trim(c); }

bool Poly::operator==(const Poly& o) const { return F == o.F && c == o.c; }

Poly poly_zero(const Field& F) { return Poly(F, {}); }
Poly poly_one(const Field& F) { return Poly(F, {1}); }
Poly poly_const(const Field& F, fe a) { return Poly(F, {a}); }

Poly poly_xn_minus_a(const Field& F, int n, fe a) {
    std::vector<fe> c(n + 1, 0);
    c[0] = F.neg(a);
    c[n] = 1;
    return Poly(F, std::move(c));
}

Poly poly_add(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const Field& F = *f.F;
    std::vector<fe> r(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(f.at(int(i)), g.at(int(i)));
    return Poly(F, std::move(r));
}

Poly poly_sub(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const Field& F = *f.F;
    std::vector<fe> r(std::max(f.c.size(), g.c.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = F.sub(f.at(int(i)), g.at(int(i)));
    return Poly(F, std::move(r));
}

Poly poly_mul(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const Field& F = *f.F;
    if (f.is_zero() || g.is_zero()) return poly_zero(F);
    std::vector<fe> r(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i]) continue;
        for (size_t j = 0; j < g.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(f.c[i], g.c[j]));
    }
    return Poly(F, std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    const Field& F = *f.F;
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.deg() < g.deg()) return {poly_zero(F), f};
    std::vector<fe> rem = f.c;
    std::vector<fe> quo(f.deg() - g.deg() + 1, 0);
    fe glead_inv = F.inv(g.lead());
    for (int i = f.deg(); i >= g.deg(); --i) {
        fe cur = rem[i];
        if (!cur) continue;
        fe qc = F.mul(cur, glead_inv);
        quo[i - g.deg()] = qc;
        for (int j = 0; j <= g.deg(); ++j)
            rem[i - g.deg() + j] = F.sub(rem[i - g.deg() + j], F.mul(qc, g.c[j]));
    }
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly poly_monic(const Poly& f) {
    if (f.is_zero() || f.lead() == 1) return f;
    const Field& F = *f.F;
    fe il = F.inv(f.lead());
    std::vector<fe> r = f.c;
    for (auto& x : r) x = F.mul(x, il);
    return Poly(F, std::move(r));
}

Poly poly_gcd(Poly f, Poly g) {
    check_same_field(f, g);
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    while (!g.is_zero()) {
        Poly r = poly_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(f);
}

bool poly_divides(const Poly& g, const Poly& f) { return poly_divmod(f, g).second.is_zero(); }

fe poly_eval(const Poly& f, fe x) {
    const Field& F = *f.F;
    fe acc = 0;
    for (int i = f.deg(); i >= 0; --i) acc = F.add(F.mul(acc, x), f.c[i]);
    return acc;
}

Poly poly_reduce_xn_a(const Poly& f, int n, fe a) {
    const Field& F = *f.F;
    std::vector<fe> r(n, 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (!f.c[i]) continue;
        // x^i = a^(i/n) x^(i mod n)
        fe scale = F.pow(a, long(i) / n);
        int pos = int(i) % n;
        r[pos] = F.add(r[pos], F.mul(f.c[i], scale));
    }
    return Poly(F, std::move(r));
}

Poly poly_mulmod_xn_a(const Poly& f, const Poly& g, int n, fe a) {
    return poly_reduce_xn_a(poly_mul(f, g), n, a);
}

Poly generator_from_check(const Field& F, int n, fe a, const Poly& h) {
    auto [g, rem] = poly_divmod(poly_xn_minus_a(F, n, a), h);
    if (!rem.is_zero()) throw std::invalid_argument("not a check polynomial of x^n - a");
    return g;
}

std::vector<ExtElem> embed_poly(const Poly& g, const ExtField& EF) {
    std::vector<ExtElem> r(g.c.size());
    for (size_t i = 0; i < g.c.size(); ++i) r[i] = EF.embed(g.c[i]);
    return r;
}

int root_multiplicity(const Poly& g, const ExtField& EF, const ExtElem& rho) {
    if (g.is_zero()) throw std::invalid_argument("root_multiplicity of zero polynomial");
    std::vector<ExtElem> cur = embed_poly(g, EF);
    int count = 0;
    while (cur.size() > 1) {
        // synthetic division by (x - rho): t walks down from the leading
        // coefficient, final t is the remainder g(rho)
        int d = int(cur.size()) - 1;
        std::vector<ExtElem> quo(d);
        ExtElem t = cur[d];
        for (int i = d - 1; i >= 0; --i) {
            quo[i] = t;
            t = EF.add(cur[i], EF.mul(rho, t));
        }
        if (!EF.is_zero(t)) break;
        cur = std::move(quo);
        ++count;
    }
    return count;
}

}  // namespace ccwb
