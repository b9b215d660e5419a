#ifndef CCWB_POLY_HPP
#define CCWB_POLY_HPP

#include <utility>
#include <vector>

#include "ccwb/ext_field.hpp"
#include "ccwb/field.hpp"

namespace ccwb {

// Dense univariate polynomial over a base field, coefficient of x^i at
// index i.  Canonical form: no trailing zero coefficients; the zero
// polynomial is the empty vector.
struct Poly {
    const Field* F = nullptr;
    std::vector<fe> c;

    Poly() = default;
    Poly(const Field& f, std::vector<fe> coeffs);

    int deg() const { return int(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    fe lead() const { return c.back(); }
    fe at(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : fe(0); }

    bool operator==(const Poly&) const;
};

Poly poly_zero(const Field& F);
Poly poly_one(const Field& F);
Poly poly_const(const Field& F, fe a);
// x^n - a
Poly poly_xn_minus_a(const Field& F, int n, fe a);

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
// (quotient, remainder), deg r < deg g; throws on zero divisor / field mismatch
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
// monic gcd
Poly poly_gcd(Poly f, Poly g);
Poly poly_monic(const Poly& f);
bool poly_divides(const Poly& g, const Poly& f);  // g | f

fe poly_eval(const Poly& f, fe x);

// f mod (x^n - a), by folding x^(n+j) -> a x^j
Poly poly_reduce_xn_a(const Poly& f, int n, fe a);
// f*g mod (x^n - a)
Poly poly_mulmod_xn_a(const Poly& f, const Poly& g, int n, fe a);

// g = (x^n - a) / h; throws "not a check polynomial" on a nonzero
// remainder.  h is taken verbatim, so g is monic up to h's leading unit.
Poly generator_from_check(const Field& F, int n, fe a, const Poly& h);

// Largest y >= 0 with (x - rho)^y dividing g, computed in the extension
// field that hosts rho.
int root_multiplicity(const Poly& g, const ExtField& EF, const ExtElem& rho);

std::vector<ExtElem> embed_poly(const Poly& g, const ExtField& EF);

}  // namespace ccwb

#endif
