#pragma once

#include "eisen/arith/dlog.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace eisen {

// Level data for prime N and a prime p >= 5 dividing N-1.
struct LevelContext {
  int64_t N = 0;
  int64_t p = 0;
  int64_t q = 0;         // exact p-part of N-1
  int f = 0;             // q = p^f
  int64_t xi_num = 0;    // xi = (N-1)/12 = n/m in lowest terms
  int64_t xi_den = 0;
  int64_t v = 0;         // n = v*q
  int64_t v_tilde = 0;   // v^{-1} mod q
  int64_t r_tilde = 0;   // v * m^{-1} mod q
  int64_t generator = 0; // smallest primitive root mod N
  std::shared_ptr<const DiscreteLog> log;

  // dlog_{g_N}(x) in [0, N-1).
  int64_t dlog(int64_t x) const;
  // dlog reduced mod q: the class of x in U = F_N^x / q-th powers.
  int64_t u_class(int64_t x) const;
  std::string label() const;
};

LevelContext build_context(int64_t N, int64_t p);

int64_t dlog(const LevelContext& ctx, int64_t x);

}  // namespace eisen
