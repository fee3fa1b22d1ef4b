#pragma once

#include "eisen/arith/level_context.hpp"

#include <cstdint>
#include <string>

namespace eisen {

// An element of U^{(x)a} (x) mu_q^{(x)b}, stored as its exponent in Z/q with
// respect to g_N (x)...(x) zeta.
class TwistedUnit {
 public:
  TwistedUnit(int64_t q, int64_t value, int u_weight, int mu_weight);

  static TwistedUnit of_residue(const LevelContext& ctx, int64_t x);
  static TwistedUnit zero(int64_t q, int u_weight, int mu_weight);

  int64_t q() const { return q_; }
  int64_t value() const { return value_; }
  int u_weight() const { return u_weight_; }
  int mu_weight() const { return mu_weight_; }

  TwistedUnit operator+(const TwistedUnit& other) const;
  TwistedUnit operator-(const TwistedUnit& other) const;
  TwistedUnit operator-() const;
  TwistedUnit scaled(int64_t k) const;
  TwistedUnit tensor(const TwistedUnit& other) const;
  bool operator==(const TwistedUnit& other) const;
  bool is_zero() const { return value_ == 0; }
  std::string to_string() const;

 private:
  void require_same(const TwistedUnit& other) const;

  int64_t q_;
  int64_t value_;
  int u_weight_;
  int mu_weight_;
};

}  // namespace eisen
