#include "ccwb/textio.hpp"

#include <cctype>
#include <stdexcept>

namespace ccwb {

namespace {

// Parses one coefficient token starting at s[i]; advances i.
fe parse_token(const std::string& s, size_t& i, const Field& F) {
    char ch = s[i];
    if (std::isdigit((unsigned char)ch)) {
        ++i;
        int d = ch - '0';
        return F.from_digit(d);  // range-checked there
    }
    if (ch == 'A') {
        if (F.m() == 1)
            throw std::invalid_argument("'A' is not an element of the prime field GF(" +
                                        std::to_string(F.q()) + ")");
        ++i;
        long long k = 1;
        // exponents are a single digit: fields here have q <= 9, so A^k
        // needs k <= 7, and a longer exponent would be ambiguous against
        // the following coefficient token
        if (i < s.size() && s[i] == '^') {
            ++i;
            if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                throw std::invalid_argument("missing exponent after 'A^'");
            k = s[i] - '0';
            ++i;
        }
        return F.from_power(k);
    }
    throw std::invalid_argument(std::string("invalid character '") + ch + "' in polynomial string");
}

}  // namespace

fe parse_element(const std::string& s, const Field& F) {
    if (s.empty()) throw std::invalid_argument("empty element string");
    size_t i = 0;
    fe v = parse_token(s, i, F);
    if (i != s.size()) throw std::invalid_argument("trailing characters in element string");
    return v;
}

std::string element_string(fe a, const Field& F) { return F.to_string(a); }

Poly parse_poly(const std::string& s, const Field& F) {
    size_t i = 0;
    if (s.rfind("(D)", 0) == 0) i = 3;  // annotation seen in some published tables
    if (i >= s.size()) throw std::invalid_argument("empty polynomial string");
    std::vector<fe> coeffs;
    while (i < s.size()) coeffs.push_back(parse_token(s, i, F));
    return Poly(F, std::move(coeffs));
}

std::string poly_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (fe c : f.c) s += f.F->to_string(c);
    return s;
}

}  // namespace ccwb
