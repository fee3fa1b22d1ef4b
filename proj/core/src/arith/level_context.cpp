#include "eisen/arith/level_context.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"

#include <cassert>
#include <string>

namespace eisen {

int64_t LevelContext::dlog(int64_t x) const { return (*log)(x); }

int64_t LevelContext::u_class(int64_t x) const { return mod(dlog(x), q); }

std::string LevelContext::label() const { return "N=" + std::to_string(N) + ",p=" + std::to_string(p); }

LevelContext build_context(int64_t N, int64_t p) {
  const std::string module = "core-arith";
  if (!is_prime(N)) throw Error(ErrorCode::NotPrime, module, "N=" + std::to_string(N));
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, module, "p=" + std::to_string(p));
  if (p < 5 || N < 5) throw Error(ErrorCode::SmallPrime, module, "need p >= 5 and N >= 5");
  if ((N - 1) % p != 0) {
    throw Error(ErrorCode::PDoesNotDivide, module, std::to_string(p) + " does not divide " + std::to_string(N - 1));
  }
  LevelContext ctx;
  ctx.N = N;
  ctx.p = p;
  ctx.q = 1;
  int64_t rest = N - 1;
  while (rest % p == 0) {
    rest /= p;
    ctx.q *= p;
    ++ctx.f;
  }
  int64_t g = gcd(N - 1, 12);
  ctx.xi_num = (N - 1) / g;
  ctx.xi_den = 12 / g;
  assert(12 * ctx.xi_num == (N - 1) * ctx.xi_den && gcd(ctx.xi_num, ctx.xi_den) == 1);
  if (ctx.xi_num % ctx.q != 0) throw Error(ErrorCode::InvalidArgument, module, "q does not divide n");
  ctx.v = ctx.xi_num / ctx.q;
  ctx.v_tilde = inv_mod(ctx.v, ctx.q);
  ctx.r_tilde = mul_mod(ctx.v, inv_mod(ctx.xi_den, ctx.q), ctx.q);
  ctx.generator = smallest_primitive_root(N);
  ctx.log = std::make_shared<const DiscreteLog>(N, ctx.generator);
  return ctx;
}

int64_t dlog(const LevelContext& ctx, int64_t x) { return ctx.dlog(x); }

}  // namespace eisen
