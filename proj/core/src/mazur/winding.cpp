#include "eisen/mazur/winding.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/path.hpp"

#include <boost/multiprecision/integer.hpp>

namespace eisen {

namespace {

const char* kModule = "mazur";

int64_t to_i64(const BigInt& x) { return static_cast<int64_t>(x); }

BigInt qmod(const BigInt& x, const BigInt& q) { return mod_floor(x, q); }

BigInt qinv(const BigInt& x, const BigInt& q) { return inv_mod(to_i64(qmod(x, q)), to_i64(q)); }

bool unit_mod_p(const BigInt& x, int64_t p) { return mod_floor(x, BigInt(p)) != 0; }

BigInt dlog_q(const LevelContext& ctx, int64_t x) { return mod(ctx.dlog(mod(x, ctx.N)), ctx.q); }

BigInt raw_phi(const EisLocalData& eis, int64_t x) {
  const int64_t N = eis.absolute->level();
  Chain c = path_symbol(Curve::X0, N, 1, inv_mod(x, N));
  return eis.h_ih_coordinate(eis.absolute->coordinates(c));
}

IntMatrix scalar(std::size_t n, const BigInt& k) { return IntMatrix::identity(n).scaled(k); }

BigInt slack_modulus(const EisLocalData& eis) {
  return boost::multiprecision::pow(eis.q, static_cast<unsigned>(eis.options.slack));
}

void require_precision(const EisLocalData& eis) {
  for (const BigInt& e : eis.q_h_i2->p_invariants(eis.p)) {
    if (slack_modulus(eis) % e != 0)
      throw Error(ErrorCode::PrecisionExhausted, kModule, "h/I^2 has exponent beyond q^slack; raise the slack");
  }
}

}  // namespace

WindingData build_winding(std::shared_ptr<const EisLocalData> eis) {
  const LevelContext& ctx = eis->absolute->context();
  const BigInt& q = eis->q;
  WindingData w;
  w.eis = eis;
  Chain e(ctx.N, Curve::X0);
  e.add_symbol(0, 1, 1);
  w.winding_class = eis->relative->coordinates(e);

  w.kappa = raw_phi(*eis, ctx.generator);
  if (!unit_mod_p(w.kappa, ctx.p)) throw Error(ErrorCode::ZeroCoordinate, kModule, "phi(g) does not generate H/IH");
  const BigInt kinv = qinv(w.kappa, q);
  w.phi_table.assign(ctx.N, BigInt(0));
  for (int64_t x = 1; x < ctx.N; ++x) w.phi_table[x] = qmod(raw_phi(*eis, x) * kinv, q);

  for (int64_t l : eis->ells) {
    w.e_plus[l] = winding_apply(w, eis->eta_rel.at(l));
    w.e_tilde[l] = phi_coordinate(w, w.e_plus[l]);
  }
  w.e_plus_w1 = winding_apply(w, eis->w1_rel);

  for (int64_t l : eis->ells) {
    BigInt c = eis->i_i2_coordinate(eis->eta_abs.at(l));
    BigInt value = qmod(BigInt(l - 1) * dlog_q(ctx, l), q);
    if (unit_mod_p(c, ctx.p) && unit_mod_p(value, ctx.p)) {
      w.base_ell = l;
      w.base_coordinate = c;
      w.base_value = value;
      break;
    }
  }
  if (w.base_ell == 0) throw Error(ErrorCode::ZeroCoordinate, kModule, "no eta_l generates I/I^2 with l <= bound");
  return w;
}

IntVector winding_apply(const WindingData& w, const IntMatrix& x) {
  if (!w.eis->ideal_rel.contains(x)) throw Error(ErrorCode::NotInIdeal, kModule, "element is not in I");
  IntVector image = x.left_apply(w.winding_class);
  return w.eis->absolute->to_space(image);
}

BigInt phi_coordinate(const WindingData& w, const IntVector& v) {
  return qmod(w.eis->h_ih_coordinate(v) * qinv(w.kappa, w.eis->q), w.eis->q);
}

BigInt winding_identification(const WindingData& w, const IntMatrix& x) {
  if (!w.eis->ideal.contains(x)) throw Error(ErrorCode::NotInIdeal, kModule, "element is not in I");
  const BigInt& q = w.eis->q;
  return qmod(w.eis->i_i2_coordinate(x) * qinv(w.base_coordinate, q) * w.base_value, q);
}

PhiVerdict phi_check(const WindingData& w, int64_t a, int64_t b) {
  const LevelContext& ctx = w.eis->absolute->context();
  if (gcd(a, b) != 1) throw Error(ErrorCode::InvalidArgument, kModule, "a/b must be in lowest terms");
  PhiVerdict v;
  v.a = a;
  v.b = b;
  v.lhs = phi_coordinate(w, w.eis->absolute->coordinates(path_symbol(Curve::X0, ctx.N, a, b)));
  v.rhs = dlog_q(ctx, inv_mod(mod(b, ctx.N), ctx.N));
  v.ok = v.lhs == v.rhs;
  return v;
}

std::vector<WindingCheck> winding_checks(const WindingData& w) {
  const LevelContext& ctx = w.eis->absolute->context();
  const BigInt& q = w.eis->q;
  std::vector<WindingCheck> out;
  for (int64_t l : w.eis->ells) {
    WindingCheck c;
    c.ell = l;
    c.lhs = w.e_tilde.at(l);
    c.literal_rhs = qmod(BigInt(l - 1) * dlog_q(ctx, l), q);
    c.corrected_rhs = qmod(-c.literal_rhs, q);
    c.literal_ok = c.lhs == c.literal_rhs;
    c.corrected_ok = c.lhs == c.corrected_rhs;
    c.identification_ok = winding_identification(w, w.eis->eta_abs.at(l)) == c.literal_rhs;
    out.push_back(c);
  }
  return out;
}

RootCheck root_identity(const EisLocalData& eis, int64_t l) {
  if (mod(l - 1, eis.p) == 0) throw Error(ErrorCode::BadPrime, kModule, "l - 1 must be a unit mod p");
  require_precision(eis);
  const BigInt Q = slack_modulus(eis);
  const std::size_t n = eis.absolute->rank();
  RootCheck r;
  r.ell = l;
  r.u = inv_mod(mod(l - 1, to_i64(Q)), to_i64(Q));
  const IntMatrix& T = eis.t_abs.at(l);
  IntMatrix t = IntMatrix::identity(n) + eis.eta_abs.at(l).scaled(r.u);
  IntMatrix expr = t * t - T * t + scalar(n, l);
  r.holds = eis.in_ideal2_p(expr);
  if (n == 1) r.scalar_value = expr(0, 0);
  return r;
}

std::vector<int64_t> ad_witness_primes(const LevelContext& ctx, int64_t bound) {
  std::vector<int64_t> out;
  for (int64_t l : primes_up_to(bound))
    if (l != ctx.N && l != ctx.p && mod(l, ctx.p) != 1) out.push_back(l);
  return out;
}

AdResult compute_a_d(const WindingData& w, const std::vector<int64_t>& ells) {
  const EisLocalData& eis = *w.eis;
  const LevelContext& ctx = eis.absolute->context();
  const BigInt& q = eis.q;
  const std::size_t n = eis.absolute->rank();
  AdResult res;
  for (int64_t l : ells) {
    if (l == ctx.N || !eis.t_abs.count(l))
      throw Error(ErrorCode::BadPrime, kModule, "no Hecke data for l = " + std::to_string(l));
    if (mod(l, to_i64(q)) == 1 || mod(l, ctx.p) == 1)
      throw Error(ErrorCode::BadPrime, kModule, "l = " + std::to_string(l) + " is 1 mod p");
    RootCheck rc = root_identity(eis, l);
    if (!rc.holds) throw Error(ErrorCode::RootIdentityFails, kModule, "root identity fails at l = " + std::to_string(l));
    const BigInt Q = slack_modulus(eis);
    const BigInt linv = inv_mod(mod(l, to_i64(Q)), to_i64(Q));
    const IntMatrix& T = eis.t_abs.at(l);
    IntMatrix a_elem = eis.eta_abs.at(l).scaled(rc.u);
    IntMatrix t = IntMatrix::identity(n) + a_elem;
    // d = l (1 + chi_d): chi_d = (T - t) / l - 1, shifted into I by a scalar in q^slack h.
    const BigInt shift = l * linv - 1;
    IntMatrix d_elem = (T - t).scaled(linv) - scalar(n, 1) - scalar(n, shift);
    if (!eis.in_ideal2_p(scalar(n, shift)))
      throw Error(ErrorCode::PrecisionExhausted, kModule, "q^slack is not inside I^2");
    AdWitness wt;
    wt.ell = l;
    wt.a_value = winding_identification(w, a_elem);
    wt.d_value = winding_identification(w, d_elem);
    wt.minus_dlog = qmod(-dlog_q(ctx, l), q);
    res.witnesses.push_back(wt);
  }
  bool solved = false;
  for (const AdWitness& wt : res.witnesses) {
    if (!unit_mod_p(wt.minus_dlog, ctx.p)) continue;
    BigInt inv = qinv(wt.minus_dlog, q);
    BigInt a = qmod(wt.a_value * inv, q), d = qmod(wt.d_value * inv, q);
    if (!solved) {
      res.a_tilde = a;
      res.d_tilde = d;
      solved = true;
    } else if (a != res.a_tilde || d != res.d_tilde) {
      throw Error(ErrorCode::InconsistentWitnesses, kModule, "witness l = " + std::to_string(wt.ell) + " disagrees");
    }
    res.solving.push_back(wt.ell);
  }
  if (!solved) throw Error(ErrorCode::ZeroCoordinate, kModule, "no witness with dlog(l) a unit");
  for (const AdWitness& wt : res.witnesses) {
    if (qmod(res.a_tilde * wt.minus_dlog - wt.a_value, q) != 0 || qmod(res.d_tilde * wt.minus_dlog - wt.d_value, q) != 0)
      throw Error(ErrorCode::InconsistentWitnesses, kModule, "witness l = " + std::to_string(wt.ell) + " disagrees");
  }
  return res;
}

}  // namespace eisen
