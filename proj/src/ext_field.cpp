#include "ccwb/ext_field.hpp"

#include <stdexcept>

namespace ccwb {

namespace {

// Polynomial helpers over a base field, used only during modulus search.
// Coefficient vectors are constant-first with no trailing zeros.
using BPoly = std::vector<fe>;

void trim(BPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BPoly pmul(const Field& F, const BPoly& a, const BPoly& b) {
    if (a.empty() || b.empty()) return {};
    BPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return r;
}

// remainder of a modulo monic f
BPoly pmod(const Field& F, BPoly a, const BPoly& f) {
    trim(a);
    int df = int(f.size()) - 1;
    while (int(a.size()) - 1 >= df) {
        fe lead = a.back();
        int shift = int(a.size()) - 1 - df;
        if (lead) {
            for (int j = 0; j <= df; ++j)
                a[shift + j] = F.sub(a[shift + j], F.mul(lead, f[j]));
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

BPoly pmulmod(const Field& F, const BPoly& a, const BPoly& b, const BPoly& f) {
    return pmod(F, pmul(F, a, b), f);
}

BPoly ppow_q(const Field& F, BPoly a, const BPoly& f) {
    // a^q mod f by square and multiply over the small exponent q
    int q = F.q();
    BPoly r{1};
    while (q > 0) {
        if (q & 1) r = pmulmod(F, r, a, f);
        a = pmulmod(F, a, a, f);
        q >>= 1;
    }
    return r;
}

BPoly pgcd(const Field& F, BPoly a, BPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // normalize b monic so pmod applies
        fe il = F.inv(b.back());
        for (auto& c : b) c = F.mul(c, il);
        BPoly r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f of degree s is irreducible iff x^(q^s) = x mod f and
// gcd(x^(q^(s/l)) - x, f) = 1 for every prime l dividing s.
bool is_irreducible(const Field& F, const BPoly& f) {
    int s = int(f.size()) - 1;
    if (s == 1) return true;
    auto is_prime = [](int v) {
        if (v < 2) return false;
        for (int d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    auto minus_x = [&](BPoly t) {
        if (t.size() < 2) t.resize(2, 0);
        t[1] = F.sub(t[1], 1);
        trim(t);
        return t;
    };
    BPoly t{0, 1};
    for (int j = 1; j <= s; ++j) {
        t = ppow_q(F, t, f);  // t = x^(q^j) mod f
        if (j < s && s % j == 0 && is_prime(s / j)) {
            BPoly g = pgcd(F, f, minus_x(t));
            if (int(g.size()) - 1 != 0) return false;
        }
        if (j == s && !minus_x(t).empty()) return false;
    }
    return true;
}

}  // namespace

ExtField::ExtField(const Field& base, int s) : base_(&base), s_(s) {
    if (s < 1 || s > kMaxExtDegree) throw std::invalid_argument("extension degree out of range");
    size_ = 1;
    for (int i = 0; i < s; ++i) size_ *= (u128)base.q();

    order_factors_ = prime_factors_pow_minus_one(base.q(), s);

    // Lexicographic search: candidate value v encodes coefficients
    // c_0..c_{s-1} as base-q digits (element-code order), modulus is
    // monic of degree s.
    const Field& F = base;
    u128 limit = size_;
    bool found = false;
    for (u128 v = 1; v < limit && !found; ++v) {
        BPoly f(s + 1, 0);
        u128 t = v;
        for (int i = 0; i < s; ++i) {
            f[i] = fe(t % F.q());
            t /= F.q();
        }
        f[s] = 1;
        if (s >= 1 && f[0] == 0) continue;  // divisible by x
        if (!is_irreducible(F, f)) continue;
        // primitivity of x: x^(Q-1) = 1 and x^((Q-1)/l) != 1 for prime l
        BPoly x{0, 1};
        x = pmod(F, x, f);
        auto powmod_poly = [&](BPoly a, u128 e) {
            BPoly r{1};
            while (e > 0) {
                if (e & 1) r = pmulmod(F, r, a, f);
                a = pmulmod(F, a, a, f);
                e >>= 1;
            }
            return r;
        };
        BPoly full = powmod_poly(x, size_ - 1);
        if (!(full.size() == 1 && full[0] == 1)) continue;
        bool primitive = true;
        for (u128 l : order_factors_) {
            BPoly wpow = powmod_poly(x, (size_ - 1) / l);
            if (wpow.size() == 1 && wpow[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;

        modulus_ = f;
        found = true;
    }
    if (!found) throw std::runtime_error("no primitive modulus found");  // cannot happen

    // x^(s+j) mod f rows for reduction, j = 0..s-2
    red_.resize(std::max(0, s_ - 1));
    BPoly cur(s_ + 1, 0);
    cur[s_] = 1;
    cur = pmod(*base_, cur, modulus_);
    for (int j = 0; j <= s_ - 2; ++j) {
        if (j > 0) {
            BPoly shifted(cur.size() + 1, 0);
            for (size_t i = 0; i < cur.size(); ++i) shifted[i + 1] = cur[i];
            cur = pmod(*base_, shifted, modulus_);
        }
        ExtElem e{};
        for (size_t i = 0; i < cur.size(); ++i) e.c[i] = cur[i];
        red_[j] = e;
    }

    gen_ = ExtElem{};
    if (s_ >= 2) {
        gen_.c[1] = 1;
    } else {
        gen_.c[0] = base_->neg(modulus_[0]);  // x = -c0 mod (x + c0)
    }
}

ExtElem ExtField::one() const {
    ExtElem e{};
    e.c[0] = 1;
    return e;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    ExtElem r{};
    for (int i = 0; i < s_; ++i) r.c[i] = base_->add(a.c[i], b.c[i]);
    return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
    ExtElem r{};
    for (int i = 0; i < s_; ++i) r.c[i] = base_->sub(a.c[i], b.c[i]);
    return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
    ExtElem r{};
    for (int i = 0; i < s_; ++i) r.c[i] = base_->neg(a.c[i]);
    return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    std::array<fe, 2 * kMaxExtDegree> tmp{};
    for (int i = 0; i < s_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < s_; ++j) {
            if (!b.c[j]) continue;
            tmp[i + j] = base_->add(tmp[i + j], base_->mul(a.c[i], b.c[j]));
        }
    }
    for (int d = 2 * s_ - 2; d >= s_; --d) {
        fe v = tmp[d];
        if (!v) continue;
        tmp[d] = 0;
        const ExtElem& row = red_[d - s_];
        for (int t = 0; t < s_; ++t)
            tmp[t] = base_->add(tmp[t], base_->mul(v, row.c[t]));
    }
    ExtElem r{};
    for (int i = 0; i < s_; ++i) r.c[i] = tmp[i];
    return r;
}

ExtElem ExtField::pow(const ExtElem& a, u128 e) const {
    ExtElem r = one();
    ExtElem base_el = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base_el);
        base_el = mul(base_el, base_el);
        e >>= 1;
    }
    return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("inverse of zero");
    return pow(a, size_ - 2);
}

ExtElem ExtField::embed(fe a) const {
    ExtElem r{};
    r.c[0] = a;
    return r;
}

std::optional<fe> ExtField::project(const ExtElem& a) const {
    for (int i = 1; i < s_; ++i)
        if (a.c[i] != 0) return std::nullopt;
    return a.c[0];
}

u128 ExtField::element_order(const ExtElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("element_order of zero");
    u128 ord = size_ - 1;
    for (u128 l : order_factors_) {
        while (ord % l == 0 && pow(a, ord / l) == one()) ord /= l;
    }
    return ord;
}

std::string ExtField::modulus_string() const {
    std::string s;
    for (int i = s_; i >= 0; --i) {
        fe c = modulus_[i];
        if (!c) continue;
        if (!s.empty()) s += " + ";
        bool unit = (c == 1);
        if (i == 0 || !unit) s += base_->to_string(c);
        if (i >= 1) s += (!unit ? "*x" : "x");
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace ccwb
