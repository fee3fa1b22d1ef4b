#pragma once

#include "eisen/arith/finite_quotient.hpp"
#include "eisen/hecke/lattice_algebra.hpp"
#include "eisen/hecke/operators.hpp"

#include <map>
#include <memory>
#include <optional>

namespace eisen {

struct EisOptions {
  int64_t hecke_bound = 50;   // T_l for primes l <= bound, l != N
  int64_t slack = 3;          // h/I^2 arithmetic is done modulo q^slack
  int64_t projector_power = 2;  // projector computed modulo q^projector_power
};

// The Eisenstein ideal of the Hecke algebra acting on the plus part of
// H_1(X0(N)): everything is built on F = H_1(X0(N), cusps)^+ and restricted
// to H = H_1(X0(N))^+. Ring orders are p-primary parts.
struct EisLocalData {
  std::shared_ptr<const SymbolSpace> relative;  // F
  std::shared_ptr<const SymbolSpace> absolute;  // H
  EisOptions options;
  int64_t p = 0;
  BigInt q;
  BigInt modulus;  // q^projector_power

  std::vector<int64_t> ells;
  std::map<int64_t, IntMatrix> t_rel, t_abs;  // T_l on F and H
  IntMatrix w_rel, w_abs, un_rel, un_abs;
  std::map<int64_t, IntMatrix> eta_rel, eta_abs;  // 1 + l - T_l
  IntMatrix w1_rel, w1_abs;                      // W + 1

  MatrixModule ring;             // h on H
  MatrixModule ideal, ideal2, ideal3;
  MatrixModule ring_rel, ideal_rel;  // same objects on F
  IntMatrix ih, i2h;             // I H and I^2 H as row lattices in H coordinates

  BigInt order_h_i, order_i_i2, order_h_i2, order_i2_i3, order_h_ih;
  bool i_i2_cyclic = false, h_ih_cyclic = false;

  IntMatrix projector;  // onto the Eisenstein component, mod `modulus`
  std::map<int64_t, IntMatrix> t_component;
  IntMatrix w_component;
  std::optional<int64_t> gorenstein_witness;

  std::shared_ptr<const LatticeQuotient> q_h_i, q_i_i2, q_h_i2, q_i2_i3, q_h_ih, q_ih_i2h;

  // Restriction of an F-matrix preserving H.
  IntMatrix restrict(const IntMatrix& on_relative) const;
  // Class of an element of h in h/I^2 (p-part coordinates), via H.
  bool in_ideal2_p(const IntMatrix& on_absolute) const;
  bool in_ideal_p(const IntMatrix& on_absolute) const;
  // p-coordinate of x in (I/I^2)_p ~ Z/q; x given on H.
  BigInt i_i2_coordinate(const IntMatrix& on_absolute) const;
  // p-coordinate of v in (H/IH)_p ~ Z/q.
  BigInt h_ih_coordinate(const IntVector& v) const;
  // p-coordinate of v in (IH/I^2H)_p; v must lie in IH.
  BigInt ih_i2h_coordinate(const IntVector& v) const;
};

EisLocalData eisenstein_ideal(const LevelContext& ctx, const EisOptions& opts = {});
// Operators on the relative space by label ("T2", ..., "W", "U"); missing
// entries are computed.
using OperatorTable = std::map<std::string, IntMatrix>;
EisLocalData eisenstein_ideal(std::shared_ptr<const SymbolSpace> relative_plus,
                              std::shared_ptr<const SymbolSpace> absolute_plus, const EisOptions& opts = {},
                              const OperatorTable* known = nullptr);
OperatorTable relative_operators(const EisLocalData& eis);

struct ProjectorChecks {
  bool idempotent = false;
  bool w_is_minus_one = false;
  bool un_is_one = false;
  bool nonzero = false;
};
ProjectorChecks check_projector(const EisLocalData& eis);

// Boundary check for the generators of the ideal generated by T_l - l - <l>
// (l != N, l <= bound) and T_N - N on X1(N) relative to the cusps over
// infinity: one row per generator and adjusted symbol [u,v]' with uv != 0,
// holding the boundary coefficients of eta [u,v]'.
struct CuspKillingWitness {
  std::vector<std::string> generators;
  IntMatrix boundaries;  // rows: generator-major, symbol-minor; cols: cusps
  bool all_zero = false;
};
CuspKillingWitness eis_kills_cusps(const SymbolSpace& x1_relative_cinf, int64_t bound);

}  // namespace eisen
