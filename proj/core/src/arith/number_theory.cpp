#include "eisen/arith/number_theory.hpp"

#include "eisen/arith/errors.hpp"

#include <cstdlib>
#include <string>

namespace eisen {

int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t gcd(int64_t a, int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t xgcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    int64_t qt = old_r / r;
    int64_t tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s;
    old_s = s;
    s = tmp;
    tmp = old_t - qt * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

int64_t pow_mod(int64_t a, int64_t e, int64_t m) {
  if (m == 1) return 0;
  int64_t base = mod(a, m), result = 1;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

int64_t inv_mod(int64_t a, int64_t m) {
  int64_t x, y;
  if (xgcd(mod(a, m), m, x, y) != 1) {
    throw Error(ErrorCode::InvalidArgument, "core-arith",
                std::to_string(a) + " is not invertible mod " + std::to_string(m));
  }
  return mod(x, m);
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<int64_t> primes_up_to(int64_t bound) {
  std::vector<int64_t> out;
  for (int64_t n = 2; n <= bound; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int64_t smallest_primitive_root(int64_t p) {
  if (p == 2) return 1;
  auto fs = factorize(p - 1);
  for (int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [r, e] : fs) {
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorCode::NotPrime, "core-arith", "no primitive root mod " + std::to_string(p));
}

int valuation(int64_t n, int64_t p) {
  int e = 0;
  n = std::llabs(n);
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

int legendre(int64_t d, int64_t n) {
  int64_t r = mod(d, n);
  if (r == 0) return 0;
  return pow_mod(r, (n - 1) / 2, n) == 1 ? 1 : -1;
}

}  // namespace eisen
