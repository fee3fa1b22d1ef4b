#include "eisen/sharifi/sharifi.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/normal_form.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/path.hpp"

namespace eisen {

namespace {

const char* kModule = "sharifi";

int64_t dq(const LevelContext& ctx, int64_t x) { return ctx.u_class(mod(x, ctx.N)); }

int64_t inv2(const LevelContext& ctx) { return inv_mod(2, ctx.q); }

BigInt qmod(const BigInt& x, int64_t q) { return mod_floor(x, BigInt(q)); }

void require_unit(const LevelContext& ctx, int64_t x) {
  if (mod(x, ctx.N) == 0) throw Error(ErrorCode::ZeroCoordinate, kModule, "symbol entry is 0 mod N");
}

// Sum of coef * dlog(label) over cusps above infinity; false if the row
// meets a cusp above 0.
bool t_of_row(const LevelContext& ctx, const std::vector<CuspClass>& cusps, const std::vector<int64_t>& row,
              int64_t& out) {
  int64_t acc = 0;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    if (cusps[c].over_zero) return false;
    acc = mod(acc + mul_mod(mod(row[c], ctx.q), dq(ctx, cusps[c].label), ctx.q), ctx.q);
  }
  out = acc;
  return true;
}

Chain diamond_chain(const Chain& c, int64_t j) {
  Chain out(c.N, c.curve);
  for (const auto& [i, coef] : c.terms) {
    ManinSymbol s = symbol_at(c.curve, c.N, i);
    out.add_symbol(mul_mod(j, s.u, c.N), mul_mod(j, s.v, c.N), coef);
  }
  return out.normalize();
}

Chain hecke_chain(const Chain& c, int64_t n) {
  Chain out(c.N, c.curve);
  for (const auto& [i, coef] : c.terms) out.add_chain(hecke_on_symbol(c.curve, c.N, n, symbol_at(c.curve, c.N, i)), coef);
  return out.normalize();
}

IntVector absolute_coordinates(const EisLocalData& eis, const Chain& x0_chain) {
  try {
    return eis.absolute->coordinates(x0_chain);
  } catch (const Error&) {
    throw Error(ErrorCode::LiftFailure, kModule, "pushforward is not an absolute class");
  }
}

IntVector phi_lift(const EisLocalData& eis, int64_t x) {
  const int64_t N = eis.absolute->level();
  return eis.absolute->coordinates(path_symbol(Curve::X0, N, 1, inv_mod(mod(x, N), N)));
}

}  // namespace

Chain adjusted_star_chain_doubled(int64_t N, int64_t u, int64_t v) {
  Chain c = adjusted_symbol_chain(Curve::X1, N, u, v);
  c.add_chain(adjusted_symbol_chain(Curve::X1, N, u, -v), 1);
  return c.normalize();
}

Chain pushforward(const Chain& x) {
  if (x.curve != Curve::X1) throw Error(ErrorCode::InvalidArgument, kModule, "pushforward starts on X1");
  Chain out(x.N, Curve::X0);
  for (const auto& [i, coef] : x.terms) {
    ManinSymbol s = symbol_at(Curve::X1, x.N, i);
    out.add_symbol(s.u, s.v, coef);
  }
  return out.normalize();
}

TwistedUnit boundary_omega(const LevelContext& ctx, int64_t u, int64_t v) {
  require_unit(ctx, u);
  require_unit(ctx, v);
  return TwistedUnit::of_residue(ctx, u) - TwistedUnit::of_residue(ctx, v);
}

TwistedUnit boundary_omega(const LevelContext& ctx, const AdjustedChain& chain) {
  if (chain.N != ctx.N) throw Error(ErrorCode::LevelMismatch, kModule, "chain level differs from context");
  TwistedUnit acc = TwistedUnit::zero(ctx.q, 1, 0);
  for (const auto& [u, v, coef] : chain.terms) acc = acc + boundary_omega(ctx, u, v).scaled(coef);
  return acc;
}

TwistedUnit t_of_cusp(const LevelContext& ctx, int64_t c, int64_t a) {
  if (mod(a, ctx.N) != 0) throw Error(ErrorCode::NotOverInfinity, kModule, "denominator not divisible by N");
  if (gcd(c, a) != 1) throw Error(ErrorCode::InvalidArgument, kModule, "cusp not in lowest terms");
  return TwistedUnit::of_residue(ctx, c);
}

TwistedUnit t_map(const LevelContext& ctx, const CuspDivisor& d) {
  TwistedUnit acc = TwistedUnit::zero(ctx.q, 1, 0);
  for (const auto& [cusp, coef] : d) {
    if (coef == 0) continue;
    if (cusp.over_zero) throw Error(ErrorCode::NotOverInfinity, kModule, "cusp " + cusp.to_string());
    acc = acc + TwistedUnit::of_residue(ctx, cusp.label).scaled(coef);
  }
  return acc;
}

DiagramVerdict check_diagram(const LevelContext& ctx) {
  const int64_t N = ctx.N;
  const std::vector<CuspClass> cusps = cusp_classes(Curve::X1, N);
  DiagramVerdict out;
  for (int64_t u = 1; u < N; ++u) {
    for (int64_t v = 1; v < N; ++v) {
      ++out.checked;
      std::vector<int64_t> row = chain_boundary_row(Curve::X1, N, adjusted_star_chain_doubled(N, u, v));
      int64_t t = 0;
      bool over_inf = t_of_row(ctx, cusps, row, t);
      if (!over_inf || mul_mod(t, inv2(ctx), ctx.q) != boundary_omega(ctx, u, v).value())
        out.mismatches.emplace_back(u, v);
    }
  }
  return out;
}

bool EvidenceReport::all_zero() const {
  if (lines.empty()) return false;
  for (const EvidenceLine& l : lines)
    if (l.nonzero != 0 || l.checked == 0) return false;
  return true;
}

EvidenceReport eisenstein_annihilation_evidence(const LevelContext& ctx, int64_t bound) {
  const int64_t N = ctx.N;
  const std::size_t n = symbol_count(Curve::X1, N);
  const std::vector<CuspClass> cusps = cusp_classes(Curve::X1, N);
  std::vector<std::vector<int64_t>> bnd(n);
  for (std::size_t i = 0; i < n; ++i) {
    Chain c(N, Curve::X1);
    c.add(i, 1);
    bnd[i] = chain_boundary_row(Curve::X1, N, c);
  }
  std::vector<Chain> gens;
  for (int64_t u = 1; u < N; ++u)
    for (int64_t v = 1; v < N; ++v) gens.push_back(adjusted_star_chain_doubled(N, u, v));

  std::vector<int64_t> ls;
  for (int64_t l : primes_up_to(bound))
    if (l != N) ls.push_back(l);
  ls.push_back(N);
  EvidenceReport rep;
  for (int64_t l : ls) {
    std::vector<std::vector<int64_t>> table = hecke_boundary_table(Curve::X1, N, l);
    for (std::size_t i = 0; i < n; ++i) {
      auto& row = table[i];
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= bnd[i][c];
      if (l != N) {
        ManinSymbol s = symbol_at(Curve::X1, N, i);
        const auto& d = bnd[symbol_index(Curve::X1, N, mul_mod(l, s.u, N), mul_mod(l, s.v, N))];
        for (std::size_t c = 0; c < row.size(); ++c) row[c] -= l * d[c];
      }
    }
    EvidenceLine line;
    line.generator = l == N ? "T" + std::to_string(N) + "-1"
                            : "T" + std::to_string(l) + "-1-" + std::to_string(l) + "<" + std::to_string(l) + ">";
    for (const Chain& x : gens) {
      std::vector<int64_t> row(cusps.size(), 0);
      for (const auto& [i, coef] : x.terms)
        for (std::size_t c = 0; c < row.size(); ++c) row[c] += coef * table[i][c];
      int64_t t = 0;
      ++line.checked;
      if (!t_of_row(ctx, cusps, row, t) || t != 0) ++line.nonzero;
    }
    rep.lines.push_back(line);
  }
  return rep;
}

TensorVerdict tensor_identity_check(const WindingData& w, int64_t ell, int64_t u, int64_t v) {
  const EisLocalData& eis = *w.eis;
  const LevelContext& ctx = eis.absolute->context();
  const int64_t N = ctx.N;
  if (ell == N || !is_prime(ell)) throw Error(ErrorCode::BadPrime, kModule, "l must be a prime != N");
  if (!eis.eta_abs.count(ell)) throw Error(ErrorCode::BadPrime, kModule, "l beyond the Hecke bound");
  require_unit(ctx, u);
  require_unit(ctx, v);
  TensorVerdict r;
  r.ell = ell;
  r.u = u;
  r.v = v;
  Chain x = adjusted_star_chain_doubled(N, u, v);
  Chain y = x.scaled(ell);
  y.add_chain(diamond_chain(x, ell), 1);
  y.add_chain(hecke_chain(x, ell), -1);
  y.normalize();
  std::vector<int64_t> row = chain_boundary_row(Curve::X1, N, y);
  r.absolute = std::all_of(row.begin(), row.end(), [](int64_t c) { return c == 0; });
  IntVector py = absolute_coordinates(eis, pushforward(y));
  try {
    r.lhs = qmod(eis.ih_i2h_coordinate(py) * inv2(ctx), ctx.q);
  } catch (const Error&) {
    throw Error(ErrorCode::LiftFailure, kModule, "pushforward of y is not in IH");
  }
  IntVector s = phi_lift(eis, mul_mod(mod(u, N), inv_mod(mod(v, N), N), N));
  r.rhs = qmod(eis.ih_i2h_coordinate(eis.eta_abs.at(ell).left_apply(s)), ctx.q);
  r.ok = r.absolute && r.lhs == r.rhs;
  return r;
}

DescentVerdict descent_check(const WindingData& w) {
  const EisLocalData& eis = *w.eis;
  const LevelContext& ctx = eis.absolute->context();
  const int64_t N = ctx.N;
  const std::size_t n = eis.absolute->rank();
  const BigInt q = ctx.q;
  // Columns: pi(2[u,1]*); targets 2 dlog(u). pi([u,v]*) = pi([u/v,1]*).
  IntMatrix A(n, N - 1, q);
  IntVector b(N - 1);
  for (int64_t u = 1; u < N; ++u) {
    IntVector c = absolute_coordinates(eis, pushforward(adjusted_star_chain_doubled(N, u, 1)));
    for (std::size_t i = 0; i < n; ++i) A.set(i, u - 1, c[i]);
    b[u - 1] = qmod(2 * dq(ctx, u), ctx.q);
  }
  DescentVerdict r;
  std::optional<IntVector> lambda = solve_left(A, b);
  r.descends = lambda.has_value();
  if (!r.descends) return r;
  auto apply = [&](const IntVector& x) {
    BigInt s = 0;
    for (std::size_t i = 0; i < n; ++i) s += (*lambda)[i] * x[i];
    return qmod(s, ctx.q);
  };
  r.kills_ih = true;
  std::vector<const IntMatrix*> gens = {&eis.w1_abs};
  for (const auto& [l, m] : eis.eta_abs) gens.push_back(&m);
  for (const IntMatrix* g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (apply(g->row(i)) != 0) r.kills_ih = false;
  r.equals_phi_inverse = true;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    if (apply(e) != phi_coordinate(w, e)) r.equals_phi_inverse = false;
  }
  return r;
}

std::vector<std::tuple<int64_t, int64_t, int64_t>> default_b_witnesses(const LevelContext& ctx) {
  std::vector<std::tuple<int64_t, int64_t, int64_t>> out;
  const int64_t second = ctx.generator == 2 ? 3 : ctx.generator;
  int taken = 0;
  for (int64_t l : primes_up_to(50)) {
    if (l == ctx.N) continue;
    out.emplace_back(l, 2, 1);
    out.emplace_back(l, second, 1);
    if (++taken == 5) break;
  }
  return out;
}

BTranscript compute_b_invariant(const WindingData& w,
                                const std::vector<std::tuple<int64_t, int64_t, int64_t>>& witnesses) {
  if (witnesses.empty()) throw Error(ErrorCode::InvalidArgument, kModule, "empty witness set");
  const EisLocalData& eis = *w.eis;
  const LevelContext& ctx = eis.absolute->context();
  const int64_t q = ctx.q;
  BTranscript t;
  t.caveat =
      "The coinvariant map is known to factor through I H only; factoring through I^2 H is not established, so b~ "
      "is conditional on both conjectural inputs.";
  const BigInt kappa = eis.ih_i2h_coordinate(eis.eta_abs.at(w.base_ell).left_apply(phi_lift(eis, ctx.generator)));
  if (qmod(kappa, ctx.p) == 0) throw Error(ErrorCode::ZeroCoordinate, kModule, "eta_0 phi(g) does not generate IH/I^2H");
  const BigInt kinv = inv_mod(static_cast<int64_t>(qmod(kappa, q)), q);
  for (const auto& [l, u, v] : witnesses) {
    BWitness b;
    b.ell = l;
    b.u = u;
    b.v = v;
    b.tensor = tensor_identity_check(w, l, u, v);
    const BigInt ldl = qmod(BigInt(l - 1) * dq(ctx, l), q);
    b.winding_value = qmod(ldl * (dq(ctx, u) - dq(ctx, v)), q);
    b.tensor_value = qmod(b.tensor.lhs * kinv * w.base_value, q);
    b.identification_ok = winding_identification(w, eis.eta_abs.at(l)) == ldl;
    t.witnesses.push_back(b);
  }
  bool solved = false;
  for (const BWitness& b : t.witnesses) {
    if (qmod(b.winding_value, ctx.p) == 0) continue;
    BigInt value = qmod(b.tensor_value * inv_mod(static_cast<int64_t>(b.winding_value), q), q);
    if (!solved) {
      t.b_tilde = value;
      solved = true;
    } else if (value != t.b_tilde) {
      throw Error(ErrorCode::WitnessDisagreement, kModule, "witness l = " + std::to_string(b.ell) + " disagrees");
    }
    t.solving.emplace_back(b.ell, b.u, b.v);
  }
  if (!solved) throw Error(ErrorCode::WitnessDisagreement, kModule, "no witness with a unit winding value");
  for (const BWitness& b : t.witnesses)
    if (qmod(t.b_tilde * b.winding_value - b.tensor_value, q) != 0)
      throw Error(ErrorCode::WitnessDisagreement, kModule, "witness l = " + std::to_string(b.ell) + " disagrees");
  return t;
}

bool congruence_cross_check(const SymbolSpace& space, int64_t ell) {
  if (space.curve() != Curve::X1) throw Error(ErrorCode::InvalidArgument, kModule, "needs an X1 space");
  const std::size_t n = space.rank();
  const IntMatrix T = hecke_matrix(space, ell).matrix;
  const IntMatrix D = diamond_matrix(space, ell).matrix;
  const IntMatrix one = IntMatrix::identity(n, space.basis().modulus());
  const IntMatrix lhs = one.scaled(ell) + D - T;
  const IntMatrix rhs = (one - D).scaled(ell - 1);
  const IntMatrix gen = T - one - D.scaled(ell);
  return lhs - rhs == gen.scaled(-1);
}

}  // namespace eisen
