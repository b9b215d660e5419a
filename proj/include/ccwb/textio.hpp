#ifndef CCWB_TEXTIO_HPP
#define CCWB_TEXTIO_HPP

#include <string>

#include "ccwb/field.hpp"
#include "ccwb/poly.hpp"

namespace ccwb {

// Element grammar: "0".."8" digits (prime fields take any digit < q,
// extension fields only digits < p), or "A" optionally followed by
// "^" and a decimal exponent.
fe parse_element(const std::string& s, const Field& F);
std::string element_string(fe a, const Field& F);

// Polynomial grammar: concatenated coefficient tokens, constant term in
// the left-most position.  A leading "(D)" annotation is consumed and
// ignored.  Example over GF(5): "0123" is x + 2x^2 + 3x^3.
Poly parse_poly(const std::string& s, const Field& F);
std::string poly_string(const Poly& f);

}  // namespace ccwb

#endif
