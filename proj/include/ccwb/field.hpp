#ifndef CCWB_FIELD_HPP
#define CCWB_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ccwb {

// Element of a base field GF(q), q <= 9, as a discrete-log code:
//   0       -> the zero element
//   c >= 1  -> A^(c-1), where A is the pinned primitive element
using fe = std::uint8_t;

// GF(q) for q in {2,3,4,5,7,8,9}, with a fixed modulus and primitive
// element per field so that every printed element string is stable:
//
//   q=2,3,5,7 : prime field, A = smallest primitive root (1, 2, 2, 3)
//   q=4       : GF(2)[x]/(x^2+x+1),    A = x
//   q=8       : GF(2)[x]/(x^3+x+1),    A = x
//   q=9       : GF(3)[x]/(x^2+2x+2),   A = x
//
// Instances are immutable singletons; all operations are pure table
// lookups and safe to share across threads.
class Field {
  public:
    static const Field& get(int q);  // throws on unsupported q

    int q() const { return q_; }
    int p() const { return p_; }
    int m() const { return m_; }

    fe zero() const { return 0; }
    fe one() const { return 1; }
    fe gen() const { return from_power(1); }  // A (equals 1 in GF(2))

    fe add(fe a, fe b) const { return add_[a * q_ + b]; }
    fe sub(fe a, fe b) const { return add_[a * q_ + neg_[b]]; }
    fe neg(fe a) const { return neg_[a]; }
    fe mul(fe a, fe b) const { return mul_[a * q_ + b]; }
    fe inv(fe a) const;  // throws on zero
    fe div(fe a, fe b) const { return mul(a, inv(b)); }
    fe pow(fe a, long long e) const;

    // A^k for any integer k (reduced mod q-1)
    fe from_power(long long k) const;
    // exponent of A, in [0, q-2]; throws on zero
    int power_index(fe a) const;

    // prime-subfield multiple d*1 for 0 <= d < p (any d < q when m == 1)
    fe from_digit(int d) const;
    // residue view for prime fields; throws when m > 1
    int residue(fe a) const;

    bool in_prime_subfield(fe a) const;

    std::string to_string(fe a) const;

    // modulus over GF(p), constant term first (empty when m == 1)
    const std::vector<int>& modulus() const { return modulus_; }
    std::string modulus_string() const;

  private:
    explicit Field(int q);

    int q_, p_, m_;
    std::vector<int> modulus_;
    std::array<fe, 81> add_{};
    std::array<fe, 81> mul_{};
    std::array<fe, 9> neg_{};
    std::array<int, 9> packed_{};   // code -> packed polynomial value (base p)
    std::array<fe, 9> unpack_{};    // packed value -> code
};

// Smallest e >= 1 with x^e = 1; divides q-1.  Throws on x = 0.
int element_order(const Field& F, fe x);

// The unique b with b^pt = a, pt a power of char(F).  Throws on a = 0.
fe pt_root(const Field& F, fe a, long long pt);

}  // namespace ccwb

#endif
