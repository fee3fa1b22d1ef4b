#include "eisen/hecke/eisenstein.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/path.hpp"

#include <boost/multiprecision/integer.hpp>

#include <functional>

namespace eisen {

namespace {

const char* kModule = "hecke";

IntMatrix flat(const MatrixModule& m) { return m.basis(); }

BigInt single_coordinate(const LatticeQuotient& lq, const IntVector& x, int64_t p, const char* what) {
  IntVector c = lq.p_coordinates(x, p);
  if (c.size() != 1) throw Error(ErrorCode::InvalidArgument, kModule, std::string(what) + " is not cyclic at p");
  return c[0];
}

IntMatrix scalar(std::size_t n, int64_t k, const std::optional<BigInt>& modulus = std::nullopt) {
  return IntMatrix::identity(n, modulus).scaled(k);
}

}  // namespace

IntMatrix EisLocalData::restrict(const IntMatrix& m) const {
  const IntMatrix& B = absolute->basis();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < B.rows(); ++i) rows.push_back(absolute->to_space(m.left_apply(B.row(i))));
  return IntMatrix::from_rows(rows, B.rows());
}

bool EisLocalData::in_ideal_p(const IntMatrix& x) const { return q_h_i->p_trivial(x.flatten(), p); }

bool EisLocalData::in_ideal2_p(const IntMatrix& x) const { return q_h_i2->p_trivial(x.flatten(), p); }

BigInt EisLocalData::i_i2_coordinate(const IntMatrix& x) const {
  return single_coordinate(*q_i_i2, x.flatten(), p, "I/I^2");
}

BigInt EisLocalData::h_ih_coordinate(const IntVector& v) const { return single_coordinate(*q_h_ih, v, p, "H/IH"); }

BigInt EisLocalData::ih_i2h_coordinate(const IntVector& v) const {
  return single_coordinate(*q_ih_i2h, v, p, "IH/I^2H");
}

EisLocalData eisenstein_ideal(const LevelContext& ctx, const EisOptions& opts) {
  SpaceOptions rel{Curve::X0, RelativeTo::AllCusps, Sign::Plus, std::nullopt};
  SpaceOptions abs{Curve::X0, RelativeTo::None, Sign::Plus, std::nullopt};
  return eisenstein_ideal(std::make_shared<const SymbolSpace>(SymbolSpace::build(ctx, rel)),
                          std::make_shared<const SymbolSpace>(SymbolSpace::build(ctx, abs)), opts);
}

EisLocalData eisenstein_ideal(std::shared_ptr<const SymbolSpace> F, std::shared_ptr<const SymbolSpace> H,
                              const EisOptions& opts, const OperatorTable* known) {
  const LevelContext& ctx = F->context();
  const int64_t N = ctx.N;
  if (F->curve() != Curve::X0 || H->curve() != Curve::X0 || F->level() != H->level() || !F->is_exact() ||
      !H->is_exact() || F->options().relative_to != RelativeTo::AllCusps || H->is_relative() ||
      F->options().sign != Sign::Plus || H->options().sign != Sign::Plus) {
    throw Error(ErrorCode::InvalidArgument, kModule, "need exact plus spaces on X0(N), relative and absolute");
  }
  if (opts.slack < 2 || opts.projector_power < 1)
    throw Error(ErrorCode::InvalidArgument, kModule, "slack must be >= 2 and projector power >= 1");

  EisLocalData e;
  e.relative = F;
  e.absolute = H;
  e.options = opts;
  e.p = ctx.p;
  e.q = ctx.q;
  e.modulus = boost::multiprecision::pow(e.q, static_cast<unsigned>(opts.projector_power));

  const std::size_t nf = F->rank(), nh = H->rank();
  auto lookup = [&](const std::string& label, const std::function<IntMatrix()>& build) {
    if (known) {
      auto it = known->find(label);
      if (it != known->end()) {
        if (it->second.rows() != nf || it->second.cols() != nf)
          throw Error(ErrorCode::CacheError, kModule, "cached operator " + label + " has the wrong shape");
        return it->second;
      }
    }
    return build();
  };
  for (int64_t l : primes_up_to(opts.hecke_bound)) {
    if (l == N) continue;
    e.ells.push_back(l);
    IntMatrix t = lookup("T" + std::to_string(l), [&] { return hecke_matrix(*F, l).matrix; });
    e.t_rel[l] = t;
    e.t_abs[l] = e.restrict(t);
    e.eta_rel[l] = scalar(nf, 1 + l) - t;
    e.eta_abs[l] = scalar(nh, 1 + l) - e.t_abs[l];
  }
  e.w_rel = lookup("W", [&] { return atkin_lehner_matrix(*F).matrix; });
  e.w_abs = e.restrict(e.w_rel);
  e.un_rel = lookup("U", [&] { return un_matrix(*F).matrix; });
  e.un_abs = e.restrict(e.un_rel);
  e.w1_rel = e.w_rel + IntMatrix::identity(nf);
  e.w1_abs = e.w_abs + IntMatrix::identity(nh);

  std::vector<IntMatrix> gens_rel = {e.w_rel}, gens_abs = {e.w_abs};
  std::vector<IntMatrix> ideal_rel = {e.w1_rel}, ideal_abs = {e.w1_abs};
  for (int64_t l : e.ells) {
    gens_rel.push_back(e.t_rel[l]);
    gens_abs.push_back(e.t_abs[l]);
    ideal_rel.push_back(e.eta_rel[l]);
    ideal_abs.push_back(e.eta_abs[l]);
  }
  e.ring_rel = generated_ring(nf, gens_rel);
  e.ideal_rel = ideal_in(e.ring_rel, ideal_rel);
  e.ring = generated_ring(nh, gens_abs);
  e.ideal = ideal_in(e.ring, ideal_abs);
  e.ideal2 = product(e.ideal, e.ideal);
  e.ideal3 = product(e.ideal2, e.ideal);
  e.ih = apply_module(e.ideal, IntMatrix::identity(nh));
  e.i2h = apply_module(e.ideal2, IntMatrix::identity(nh));

  e.q_h_i = std::make_shared<LatticeQuotient>(flat(e.ring), flat(e.ideal));
  e.q_i_i2 = std::make_shared<LatticeQuotient>(flat(e.ideal), flat(e.ideal2));
  e.q_h_i2 = std::make_shared<LatticeQuotient>(flat(e.ring), flat(e.ideal2));
  e.q_i2_i3 = std::make_shared<LatticeQuotient>(flat(e.ideal2), flat(e.ideal3));
  e.q_h_ih = std::make_shared<LatticeQuotient>(IntMatrix::identity(nh), e.ih);
  e.q_ih_i2h = std::make_shared<LatticeQuotient>(e.ih, e.i2h);
  e.order_h_i = e.q_h_i->p_order(e.p);
  e.order_i_i2 = e.q_i_i2->p_order(e.p);
  e.order_h_i2 = e.q_h_i2->p_order(e.p);
  e.order_i2_i3 = e.q_i2_i3->p_order(e.p);
  e.order_h_ih = e.q_h_ih->p_order(e.p);
  e.i_i2_cyclic = e.q_i_i2->p_cyclic(e.p);
  e.h_ih_cyclic = e.q_h_ih->p_cyclic(e.p);

  // Product of (1 - x^E) over the ideal generators: x^E vanishes at the
  // Eisenstein maximal ideal and is 1 at the others modulo p^k.
  const int64_t k = ctx.f * opts.projector_power;
  const int64_t g = static_cast<int64_t>(std::max<std::size_t>(e.ring.rank(), 1));
  BigInt E = 1;
  for (int64_t i = 1; i <= g; ++i) {
    BigInt pi = boost::multiprecision::pow(BigInt(e.p), static_cast<unsigned>(i)) - 1;
    E = boost::multiprecision::lcm(E, pi);
  }
  int64_t log_g = 0;
  for (int64_t t = 1; t < g; t *= e.p) ++log_g;
  E *= boost::multiprecision::pow(BigInt(e.p), static_cast<unsigned>(k - 1 + log_g));
  while (E < BigInt(g * k)) E *= e.p;
  const IntMatrix one = IntMatrix::identity(nh, e.modulus);
  IntMatrix P = one;
  for (const IntMatrix& x : ideal_abs) P = P * (one - pow_mod_matrix(x.reduced_mod(e.modulus), E));
  e.projector = P;
  for (int64_t l : e.ells) e.t_component[l] = P * e.t_abs[l].reduced_mod(e.modulus);
  e.w_component = P * e.w_abs.reduced_mod(e.modulus);

  if (e.i_i2_cyclic && e.order_i_i2 > 1) {
    for (int64_t l : e.ells) {
      if (e.i_i2_coordinate(e.eta_abs[l]) % e.p != 0) {
        e.gorenstein_witness = l;
        break;
      }
    }
  }
  return e;
}

OperatorTable relative_operators(const EisLocalData& e) {
  OperatorTable t;
  for (const auto& [l, m] : e.t_rel) t["T" + std::to_string(l)] = m;
  t["W"] = e.w_rel;
  t["U"] = e.un_rel;
  return t;
}

ProjectorChecks check_projector(const EisLocalData& e) {
  ProjectorChecks c;
  const IntMatrix& P = e.projector;
  c.idempotent = P * P == P;
  c.w_is_minus_one = e.w_component == P.scaled(-1);
  c.un_is_one = P * e.un_abs.reduced_mod(e.modulus) == P;
  c.nonzero = !P.is_zero();
  return c;
}

CuspKillingWitness eis_kills_cusps(const SymbolSpace& space, int64_t bound) {
  if (space.curve() != Curve::X1 || space.options().relative_to != RelativeTo::CInfinity)
    throw Error(ErrorCode::InvalidArgument, kModule, "needs an X1 space relative to the cusps over infinity");
  const int64_t N = space.level();
  const std::vector<CuspClass>& cusps = space.cusps();
  const std::size_t n = symbol_count(Curve::X1, N);

  auto plus = [](std::vector<int64_t>& acc, const std::vector<int64_t>& x, int64_t k) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += k * x[i];
  };

  std::vector<std::vector<int64_t>> bnd(n);
  for (std::size_t i = 0; i < n; ++i) {
    Chain c(N, Curve::X1);
    c.add(i, 1);
    bnd[i] = chain_boundary_row(Curve::X1, N, c);
  }
  std::vector<std::pair<std::string, std::vector<std::vector<int64_t>>>> gens;
  std::vector<int64_t> ls;
  for (int64_t l : primes_up_to(bound))
    if (l != N) ls.push_back(l);
  ls.push_back(N);
  for (int64_t l : ls) {
    std::vector<std::vector<int64_t>> table = hecke_boundary_table(Curve::X1, N, l);
    for (std::size_t i = 0; i < n; ++i) {
      ManinSymbol s = symbol_at(Curve::X1, N, i);
      plus(table[i], bnd[i], -l);
      if (l != N) plus(table[i], bnd[symbol_index(Curve::X1, N, mul_mod(l, s.u, N), mul_mod(l, s.v, N))], -1);
    }
    gens.emplace_back(l == N ? "T" + std::to_string(N) + "-" + std::to_string(N)
                             : "T" + std::to_string(l) + "-" + std::to_string(l) + "-<" + std::to_string(l) + ">",
                      std::move(table));
  }

  CuspKillingWitness w;
  w.boundaries = IntMatrix(0, cusps.size());
  w.all_zero = true;
  for (auto& [name, table] : gens) {
    w.generators.push_back(name);
    for (std::size_t k = 0; k < n; ++k) {
      ManinSymbol s = symbol_at(Curve::X1, N, k);
      if (s.u == 0 || s.v == 0) continue;  // [u,v]' with uv != 0 generate the space
      Chain x = adjusted_symbol_chain(Curve::X1, N, s.u, s.v).normalize();
      std::vector<int64_t> row(cusps.size(), 0);
      for (const auto& [i, coef] : x.terms) plus(row, table[i], coef);
      IntVector big(row.begin(), row.end());
      for (int64_t r : row)
        if (r != 0) w.all_zero = false;
      w.boundaries.append_row(big);
    }
  }
  return w;
}

}  // namespace eisen
