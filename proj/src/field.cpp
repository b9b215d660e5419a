#include "ccwb/field.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ccwb {

namespace {

struct FieldParams {
    int p, m;
    std::vector<int> modulus;  // over GF(p), constant first, monic
    int primitive_root;        // prime fields only
};

FieldParams params_for(int q) {
    switch (q) {
        case 2: return {2, 1, {}, 1};
        case 3: return {3, 1, {}, 2};
        case 4: return {2, 2, {1, 1, 1}, 0};
        case 5: return {5, 1, {}, 2};
        case 7: return {7, 1, {}, 3};
        case 8: return {2, 3, {1, 1, 0, 1}, 0};
        case 9: return {3, 2, {2, 2, 1}, 0};
        default: throw std::invalid_argument("unsupported field size q=" + std::to_string(q));
    }
}

}  // namespace

Field::Field(int q) : q_(q) {
    FieldParams fp = params_for(q);
    p_ = fp.p;
    m_ = fp.m;
    modulus_ = fp.modulus;

    // Build the packed-polynomial value of A^i for i = 0..q-2.  A prime
    // field element is its residue; an extension element a0 + a1 x (+ a2 x^2)
    // packs as a0 + a1 p + a2 p^2.
    std::vector<int> pow_packed(q_ - 1);
    if (m_ == 1) {
        int g = fp.primitive_root;
        int cur = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            pow_packed[i] = cur;
            cur = (cur * g) % p_;
        }
    } else {
        std::vector<int> cur(m_, 0);
        cur[0] = 1;
        auto pack = [&](const std::vector<int>& v) {
            int s = 0;
            for (int i = m_ - 1; i >= 0; --i) s = s * p_ + v[i];
            return s;
        };
        for (int i = 0; i < q_ - 1; ++i) {
            pow_packed[i] = pack(cur);
            // multiply by x, reduce by modulus (monic)
            std::vector<int> nxt(m_ + 1, 0);
            for (int j = 0; j < m_; ++j) nxt[j + 1] = cur[j];
            int lead = nxt[m_];
            if (lead) {
                for (int j = 0; j < m_; ++j)
                    nxt[j] = ((nxt[j] - lead * modulus_[j]) % p_ + p_) % p_;
            }
            cur.assign(nxt.begin(), nxt.begin() + m_);
        }
    }

    packed_[0] = 0;
    unpack_.fill(0);
    for (int i = 0; i < q_ - 1; ++i) {
        packed_[i + 1] = pow_packed[i];
        unpack_[pow_packed[i]] = fe(i + 1);
    }

    // addition over packed values, digitwise mod p
    auto pack_add = [&](int x, int y) {
        int r = 0, mult = 1;
        for (int j = 0; j < m_; ++j) {
            r += ((x % p_) + (y % p_)) % p_ * mult;
            x /= p_;
            y /= p_;
            mult *= p_;
        }
        return r;
    };
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            add_[a * q_ + b] = unpack_[pack_add(packed_[a], packed_[b])];

    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            fe r = 0;
            if (a && b) r = fe(1 + ((a - 1) + (b - 1)) % (q_ - 1));
            mul_[a * q_ + b] = r;
        }
    }

    neg_[0] = 0;
    for (int a = 1; a < q_; ++a) {
        for (int b = 0; b < q_; ++b)
            if (add_[a * q_ + b] == 0) neg_[a] = fe(b);
    }
}

const Field& Field::get(int q) {
    static std::map<int, Field> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, Field(q)).first;
    return it->second;
}

fe Field::inv(fe a) const {
    if (a == 0) throw std::invalid_argument("division by zero field element");
    return fe(1 + (q_ - 1 - (a - 1)) % (q_ - 1));
}

fe Field::pow(fe a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::invalid_argument("zero to negative power");
        return 0;
    }
    long long k = (long long)(a - 1) * (e % (q_ - 1));
    return from_power(k);
}

fe Field::from_power(long long k) const {
    long long r = k % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return fe(1 + r);
}

int Field::power_index(fe a) const {
    if (a == 0) throw std::invalid_argument("zero has no power index");
    return a - 1;
}

fe Field::from_digit(int d) const {
    int lim = (m_ == 1) ? q_ : p_;
    if (d < 0 || d >= lim) throw std::invalid_argument("digit out of range for this field");
    if (m_ == 1) return unpack_[d];
    fe r = 0;
    for (int i = 0; i < d; ++i) r = add(r, one());
    return r;
}

int Field::residue(fe a) const {
    if (m_ != 1) throw std::invalid_argument("residue view requires a prime field");
    return packed_[a];
}

bool Field::in_prime_subfield(fe a) const { return packed_[a] < p_; }

std::string Field::to_string(fe a) const {
    if (m_ == 1) return std::to_string(packed_[a]);
    if (in_prime_subfield(a)) return std::to_string(packed_[a]);
    int k = a - 1;
    if (k == 1) return "A";
    return "A^" + std::to_string(k);
}

std::string Field::modulus_string() const {
    if (m_ == 1) return "";
    std::string s;
    for (int i = m_; i >= 0; --i) {
        int c = (i == m_) ? 1 : modulus_[i];
        if (!c) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i >= 1) s += (c != 1 ? "*x" : "x");
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

int element_order(const Field& F, fe x) {
    if (x == 0) throw std::invalid_argument("element_order of zero");
    int k = x - 1;
    return (F.q() - 1) / std::gcd(F.q() - 1, k);
}

fe pt_root(const Field& F, fe a, long long pt) {
    if (a == 0) throw std::invalid_argument("pt_root of zero");
    if (pt < 1) throw std::invalid_argument("pt_root: exponent must be a positive power of char");
    long long t = pt;
    while (t % F.p() == 0) t /= F.p();
    if (t != 1) throw std::invalid_argument("pt_root: exponent is not a power of char");
    long long ord = F.q() - 1;
    if (ord == 1) return a;
    long long u = 1, e = pt % ord;
    // inverse of pt mod q-1 (pt is coprime to q-1, being a power of p)
    for (long long i = 0; i < ord; ++i) {
        if ((e * i) % ord == 1) {
            u = i;
            break;
        }
    }
    return F.from_power((long long)(a - 1) * u);
}

}  // namespace ccwb
