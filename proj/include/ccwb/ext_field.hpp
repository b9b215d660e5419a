#ifndef CCWB_EXT_FIELD_HPP
#define CCWB_EXT_FIELD_HPP

#include <array>
#include <optional>
#include <vector>

#include "ccwb/field.hpp"
#include "ccwb/numtheory.hpp"

namespace ccwb {

inline constexpr int kMaxExtDegree = 32;

// Element of GF(q^s): coefficient vector over the base field, constant
// term first.  Unused coefficients stay zero so equality is a plain
// array compare.
struct ExtElem {
    std::array<fe, kMaxExtDegree> c{};
    bool operator==(const ExtElem&) const = default;
};

// GF(q^s) built directly over a base field GF(q) as F[x]/(f), where f is
// the lexicographically first monic polynomial of degree s over F that is
// irreducible and has x as a primitive root.  The choice is deterministic,
// so every root of unity derived from it is reproducible run to run.
class ExtField {
  public:
    ExtField(const Field& base, int s);

    const Field& base() const { return *base_; }
    int degree() const { return s_; }
    u128 size() const { return size_; }
    u128 unit_order() const { return size_ - 1; }

    ExtElem zero() const { return {}; }
    ExtElem one() const;
    ExtElem gen() const { return gen_; }  // x, the pinned primitive element

    bool is_zero(const ExtElem& a) const { return a == ExtElem{}; }

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem pow(const ExtElem& a, u128 e) const;
    ExtElem inv(const ExtElem& a) const;

    ExtElem embed(fe a) const;
    // Inverse of embed when the element lies in the base field.
    std::optional<fe> project(const ExtElem& a) const;

    u128 element_order(const ExtElem& a) const;

    // modulus coefficients over the base field, constant first, monic
    const std::vector<fe>& modulus() const { return modulus_; }
    std::string modulus_string() const;

  private:
    const Field* base_;
    int s_;
    u128 size_;
    std::vector<fe> modulus_;
    std::vector<ExtElem> red_;  // x^(s+j) mod f, j = 0..s-2
    std::vector<u128> order_factors_;
    ExtElem gen_;
};

}  // namespace ccwb

#endif
