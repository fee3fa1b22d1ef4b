#include "eisen/arith/twisted_unit.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"

namespace eisen {

TwistedUnit::TwistedUnit(int64_t q, int64_t value, int u_weight, int mu_weight)
    : q_(q), value_(mod(value, q)), u_weight_(u_weight), mu_weight_(mu_weight) {}

TwistedUnit TwistedUnit::of_residue(const LevelContext& ctx, int64_t x) {
  return TwistedUnit(ctx.q, ctx.u_class(x), 1, 0);
}

TwistedUnit TwistedUnit::zero(int64_t q, int u_weight, int mu_weight) {
  return TwistedUnit(q, 0, u_weight, mu_weight);
}

void TwistedUnit::require_same(const TwistedUnit& other) const {
  if (q_ != other.q_ || u_weight_ != other.u_weight_ || mu_weight_ != other.mu_weight_) {
    throw Error(ErrorCode::ModulusMismatch, "core-arith", "twist weights differ: " + to_string() + " vs " +
                                                              other.to_string());
  }
}

TwistedUnit TwistedUnit::operator+(const TwistedUnit& other) const {
  require_same(other);
  return TwistedUnit(q_, value_ + other.value_, u_weight_, mu_weight_);
}

TwistedUnit TwistedUnit::operator-(const TwistedUnit& other) const {
  require_same(other);
  return TwistedUnit(q_, value_ - other.value_, u_weight_, mu_weight_);
}

TwistedUnit TwistedUnit::operator-() const { return TwistedUnit(q_, -value_, u_weight_, mu_weight_); }

TwistedUnit TwistedUnit::scaled(int64_t k) const {
  return TwistedUnit(q_, mul_mod(value_, k, q_), u_weight_, mu_weight_);
}

TwistedUnit TwistedUnit::tensor(const TwistedUnit& other) const {
  if (q_ != other.q_) throw Error(ErrorCode::ModulusMismatch, "core-arith", "tensor of different q");
  return TwistedUnit(q_, mul_mod(value_, other.value_, q_), u_weight_ + other.u_weight_,
                     mu_weight_ + other.mu_weight_);
}

bool TwistedUnit::operator==(const TwistedUnit& other) const {
  return q_ == other.q_ && value_ == other.value_ && u_weight_ == other.u_weight_ &&
         mu_weight_ == other.mu_weight_;
}

std::string TwistedUnit::to_string() const {
  return std::to_string(value_) + " in U^" + std::to_string(u_weight_) + " mu^" + std::to_string(mu_weight_) +
         " (mod " + std::to_string(q_) + ")";
}

}  // namespace eisen
