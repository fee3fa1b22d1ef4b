#pragma once

#include "eisen/arith/twisted_unit.hpp"
#include "eisen/mazur/winding.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace eisen {

// Formal combination of adjusted symbols [u,v]* on X1(N).
struct AdjustedChain {
  int64_t N = 0;
  std::vector<std::tuple<int64_t, int64_t, int64_t>> terms;  // (u, v, coefficient)
};

// Twice [u,v]*, i.e. [u,v]' + [u,-v]', as a chain of Manin symbols on X1(N).
Chain adjusted_star_chain_doubled(int64_t N, int64_t u, int64_t v);
// Push a chain on X1(N) forward to X0(N).
Chain pushforward(const Chain& x1_chain);

// [u,v]* -> u/v in U, weights (1,0).
TwistedUnit boundary_omega(const LevelContext& ctx, int64_t u, int64_t v);
TwistedUnit boundary_omega(const LevelContext& ctx, const AdjustedChain& chain);

// Multiplicative extension of t(c/a) = c over the cusps above infinity.
TwistedUnit t_map(const LevelContext& ctx, const CuspDivisor& divisor);
TwistedUnit t_of_cusp(const LevelContext& ctx, int64_t c, int64_t a);

struct DiagramVerdict {
  std::size_t checked = 0;
  std::vector<std::pair<int64_t, int64_t>> mismatches;
  bool ok() const { return checked > 0 && mismatches.empty(); }
};
// t(boundary(x)) = boundary_omega(x) for every [u,v]* with u, v units.
DiagramVerdict check_diagram(const LevelContext& ctx);

struct EvidenceLine {
  std::string generator;
  std::size_t checked = 0;
  std::size_t nonzero = 0;
};
struct EvidenceReport {
  std::vector<EvidenceLine> lines;
  bool all_zero() const;
};
// t(boundary(eta x)) = 0 for eta = T_l - 1 - l<l> (l <= bound, l != N) and
// T_N - 1, x over all [u,v]* with u, v units.
EvidenceReport eisenstein_annihilation_evidence(const LevelContext& ctx, int64_t bound);

struct TensorVerdict {
  int64_t ell = 0, u = 0, v = 0;
  bool absolute = false;  // y has zero boundary on X1(N)
  BigInt lhs;             // (IH/I^2H)_p coordinate of pi(y)
  BigInt rhs;             // same for eta_l s, s lifting phi(u/v)
  bool ok = false;
};
// y = (l + <l> - T_l)[u,v]*.
TensorVerdict tensor_identity_check(const WindingData& w, int64_t ell, int64_t u, int64_t v);

struct DescentVerdict {
  bool descends = false;      // a functional on H with pi([u,v]*) -> dlog(u/v) exists
  bool kills_ih = false;
  bool equals_phi_inverse = false;
};
DescentVerdict descent_check(const WindingData& w);

struct BWitness {
  int64_t ell = 0, u = 0, v = 0;
  TensorVerdict tensor;
  BigInt winding_value;   // (l - 1) dlog(l) (dlog u - dlog v), class of l^(l-1) (x) u/v
  BigInt tensor_value;    // U (x) U coordinate of pi(y)
  bool identification_ok = false;  // eta_l <-> l^(l-1) under the winding map
};

struct BTranscript {
  std::vector<BWitness> witnesses;
  std::vector<std::tuple<int64_t, int64_t, int64_t>> solving;
  BigInt b_tilde;
  bool assumes_annihilation_conjecture = true;
  bool assumes_isomorphism_conjecture = true;
  std::string caveat;
};

std::vector<std::tuple<int64_t, int64_t, int64_t>> default_b_witnesses(const LevelContext& ctx);
BTranscript compute_b_invariant(const WindingData& w, const std::vector<std::tuple<int64_t, int64_t, int64_t>>& witnesses);

// (l + <l> - T_l) - (l - 1)(1 - <l>) equals -(T_l - 1 - l<l>) on the X1 space.
bool congruence_cross_check(const SymbolSpace& x1_space, int64_t ell);

}  // namespace eisen
