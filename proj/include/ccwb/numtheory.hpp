#ifndef CCWB_NUMTHEORY_HPP
#define CCWB_NUMTHEORY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ccwb {

using u128 = unsigned __int128;

std::string to_string(u128 v);

long long gcd_ll(long long a, long long b);

// Smallest s >= 1 with q^s == 1 (mod M).  Throws if gcd(q, M) != 1.
long long mult_order_mod(long long q, long long M);

// Modular inverse of a mod m (gcd(a, m) must be 1).
long long inv_mod(long long a, long long m);

bool is_prime_u128(u128 n);

// Distinct prime factors, ascending.
std::vector<u128> prime_factors(u128 n);

// Distinct prime factors of q^s - 1, using the partial factorization
// q^d - 1 for each divisor d of s to keep the hard cofactors small.
std::vector<u128> prime_factors_pow_minus_one(long long q, int s);

u128 mulmod_u128(u128 a, u128 b, u128 m);
u128 powmod_u128(u128 a, u128 e, u128 m);

}  // namespace ccwb

#endif
