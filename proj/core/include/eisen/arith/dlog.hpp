#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace eisen {

// Discrete logarithm in (Z/N)^x for prime N: baby-step giant-step inside each
// prime-power factor of N-1, recombined by Pohlig-Hellman and CRT.
class DiscreteLog {
 public:
  DiscreteLog(int64_t modulus, int64_t generator);

  int64_t modulus() const { return n_; }
  int64_t generator() const { return g_; }
  int64_t group_order() const { return order_; }
  // Exponent e in [0, N-1) with g^e = x mod N. Throws ZeroArgument for x = 0 mod N.
  int64_t operator()(int64_t x) const;

 private:
  struct Factor {
    int64_t prime;
    int exponent;
    int64_t prime_power;
    int64_t gamma;  // g^((N-1)/prime), of order prime
    int64_t giant;  // gamma^{-m}
    int64_t m;
    std::unordered_map<int64_t, int64_t> baby;  // gamma^j -> j, 0 <= j < m
  };

  int64_t log_prime_order(const Factor& f, int64_t h) const;

  int64_t n_;
  int64_t g_;
  int64_t order_;
  std::vector<Factor> factors_;
};

}  // namespace eisen
