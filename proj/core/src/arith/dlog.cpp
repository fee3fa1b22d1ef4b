#include "eisen/arith/dlog.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"

#include <cmath>
#include <string>

namespace eisen {

DiscreteLog::DiscreteLog(int64_t modulus, int64_t generator)
    : n_(modulus), g_(mod(generator, modulus)), order_(modulus - 1) {
  for (auto [r, e] : factorize(order_)) {
    Factor f;
    f.prime = r;
    f.exponent = e;
    f.prime_power = 1;
    for (int i = 0; i < e; ++i) f.prime_power *= r;
    f.gamma = pow_mod(g_, order_ / r, n_);
    f.m = static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(r))));
    int64_t cur = 1;
    for (int64_t j = 0; j < f.m; ++j) {
      f.baby.emplace(cur, j);
      cur = mul_mod(cur, f.gamma, n_);
    }
    f.giant = inv_mod(pow_mod(f.gamma, f.m, n_), n_);
    factors_.push_back(std::move(f));
  }
}

int64_t DiscreteLog::log_prime_order(const Factor& f, int64_t h) const {
  int64_t cur = h;
  for (int64_t i = 0; i <= f.m; ++i) {
    auto it = f.baby.find(cur);
    if (it != f.baby.end()) return mod(i * f.m + it->second, f.prime);
    cur = mul_mod(cur, f.giant, n_);
  }
  throw Error(ErrorCode::InvalidArgument, "core-arith", "element outside the cyclic subgroup");
}

int64_t DiscreteLog::operator()(int64_t x) const {
  int64_t xr = mod(x, n_);
  if (xr == 0) throw Error(ErrorCode::ZeroArgument, "core-arith", "dlog of 0 mod " + std::to_string(n_));
  int64_t result = 0, modulus = 1;
  for (const Factor& f : factors_) {
    int64_t cof = order_ / f.prime_power;
    int64_t gr = pow_mod(g_, cof, n_);
    int64_t hr = pow_mod(xr, cof, n_);
    int64_t gr_inv = inv_mod(gr, n_);
    int64_t digits = 0, place = 1;
    for (int k = 0; k < f.exponent; ++k) {
      int64_t shifted = mul_mod(hr, pow_mod(gr_inv, digits, n_), n_);
      int64_t reduce = f.prime_power / (place * f.prime);
      int64_t d = log_prime_order(f, pow_mod(shifted, reduce, n_));
      digits += d * place;
      place *= f.prime;
    }
    // CRT: result mod modulus, digits mod prime_power.
    int64_t t = mul_mod(mod(digits - result, f.prime_power), inv_mod(mod(modulus, f.prime_power), f.prime_power),
                        f.prime_power);
    result += modulus * t;
    modulus *= f.prime_power;
  }
  return mod(result, order_);
}

}  // namespace eisen
