#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eisen {

// Small-integer helpers. Arguments are assumed to fit comfortably in int64.
int64_t mod(int64_t a, int64_t m);
int64_t gcd(int64_t a, int64_t b);
// Returns g = gcd(a,b) and sets x, y with a*x + b*y = g.
int64_t xgcd(int64_t a, int64_t b, int64_t& x, int64_t& y);
int64_t mul_mod(int64_t a, int64_t b, int64_t m);
int64_t pow_mod(int64_t a, int64_t e, int64_t m);
// Throws NotInvertible-style InvalidArgument if gcd(a, m) != 1.
int64_t inv_mod(int64_t a, int64_t m);
bool is_prime(int64_t n);
std::vector<int64_t> primes_up_to(int64_t bound);
std::vector<std::pair<int64_t, int>> factorize(int64_t n);
int64_t smallest_primitive_root(int64_t p);
// Exponent of the prime p in n (n != 0).
int valuation(int64_t n, int64_t p);
// Kronecker symbol (d / n) for odd prime n.
int legendre(int64_t d, int64_t n);

}  // namespace eisen
