#include "eisen/cli/report.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/cli/cache.hpp"
#include "eisen/modsym/path.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace eisen {

namespace {

const char* kModule = "cli";
constexpr int64_t kX1Modulus = 1000003;
constexpr int64_t kAnnihilationBound = 20;
constexpr int64_t kCongruenceMaxLevel = 41;
constexpr int kPhiSamples = 100;

using nlohmann::json;

std::string str(const BigInt& x) { return to_decimal(x); }

std::string str(const BigRational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

// Residue mod q shown with its representative in (-q/2, q/2].
json residue(const BigInt& x, int64_t q) {
  BigInt r = x % q;
  if (r < 0) r += q;
  BigInt s = r > q / 2 ? BigInt(r - q) : r;
  return {{"residue", str(r)}, {"signed", str(s)}};
}

std::string count_of(std::size_t ok, std::size_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

std::string describe(const Error& e) {
  return std::string("[") + e.module() + "] " + error_name(e.code()) + ": " + e.what();
}

struct Pipeline {
  int64_t N, p;
  ReportOptions opts;
  LevelContext ctx;
  std::shared_ptr<const EisLocalData> eis;
  std::optional<WindingData> winding;
  std::optional<SymbolSpace> x0_full, x1_cinf, x1_plus;
  std::optional<AdResult> ad;
  std::optional<CInvariant> c;
  std::optional<BTranscript> b;

  Pipeline(int64_t n, int64_t pp, const ReportOptions& o) : N(n), p(pp), opts(o), ctx(build_context(n, pp)) {}

  EisOptions eis_options(int64_t slack) const {
    EisOptions e;
    e.hecke_bound = opts.witness_bound;
    e.slack = slack;
    return e;
  }

  const EisLocalData& ideal() {
    if (!eis)
      eis = std::make_shared<const EisLocalData>(
          load_or_build_eisenstein(ctx, eis_options(opts.slack), opts.cache_dir));
    return *eis;
  }
  const WindingData& wind() {
    ideal();
    if (!winding) winding = build_winding(eis);
    return *winding;
  }
  const SymbolSpace& full() {
    if (!x0_full) x0_full = SymbolSpace::build(ctx, {Curve::X0, RelativeTo::None, Sign::None, std::nullopt});
    return *x0_full;
  }
  const SymbolSpace& x1_relative() {
    if (!x1_cinf) x1_cinf = SymbolSpace::build(ctx, {Curve::X1, RelativeTo::CInfinity, Sign::None, kX1Modulus});
    return *x1_cinf;
  }
  const SymbolSpace& x1_plus_relative() {
    if (!x1_plus) x1_plus = SymbolSpace::build(ctx, {Curve::X1, RelativeTo::CInfinity, Sign::Plus, kX1Modulus});
    return *x1_plus;
  }
  const AdResult& a_d() {
    if (!ad) ad = compute_a_d(wind(), ad_witness_primes(ctx, opts.witness_bound));
    return *ad;
  }
  const CInvariant& c_inv() {
    if (!c) c = compute_c_invariant(ctx);
    return *c;
  }
  const BTranscript& b_inv() {
    if (!b) b = compute_b_invariant(wind(), default_b_witnesses(ctx));
    return *b;
  }
};

using CheckFn = std::function<CheckResult(Pipeline&)>;

CheckResult verdict(const std::string& name, bool ok, std::string detail, CheckStatus good = CheckStatus::Pass) {
  return {name, ok ? good : CheckStatus::Fail, std::move(detail)};
}

CheckResult check_structure(Pipeline& P) {
  const EisLocalData& e = P.ideal();
  std::size_t ok = 0;
  for (const auto& [l, m] : e.eta_abs) ok += e.in_ideal_p(m);
  const bool w_ok = e.in_ideal_p(e.w1_abs);
  const bool order_ok = e.order_h_i == e.q;
  std::string d = "|h/I|_p = " + str(e.order_h_i) + ", q = " + str(e.q) + "; T_l = 1 + l mod I for " +
                  count_of(ok, e.eta_abs.size()) + " primes l <= " + std::to_string(P.opts.witness_bound) +
                  "; W = -1 mod I: " + (w_ok ? "yes" : "no");
  return verdict("structure", order_ok && w_ok && ok == e.eta_abs.size(), d);
}

CheckResult check_projector_(Pipeline& P) {
  const ProjectorChecks c = check_projector(P.ideal());
  std::string d = std::string("idempotent ") + (c.idempotent ? "yes" : "no") + ", W = -1 " +
                  (c.w_is_minus_one ? "yes" : "no") + ", U_N = 1 " + (c.un_is_one ? "yes" : "no") + ", nonzero " +
                  (c.nonzero ? "yes" : "no") + " (mod " + str(P.ideal().modulus) + ")";
  return verdict("projector", c.idempotent && c.w_is_minus_one && c.un_is_one && c.nonzero, d);
}

CheckResult check_multiplicity_one(Pipeline& P) {
  const EisLocalData& e = P.ideal();
  const bool ok = e.h_ih_cyclic && e.order_h_ih == e.q;
  return verdict("multiplicity_one", ok,
                 "|H/IH|_p = " + str(e.order_h_ih) + ", cyclic " + (e.h_ih_cyclic ? "yes" : "no"));
}

CheckResult check_gorenstein(Pipeline& P) {
  const EisLocalData& e = P.ideal();
  if (!e.gorenstein_witness) return verdict("gorenstein", false, "no eta_l with l <= bound generates I mod I^2");
  return verdict("gorenstein", *e.gorenstein_witness <= 50,
                 "eta_" + std::to_string(*e.gorenstein_witness) + " generates (I/I^2)_p");
}

CheckResult check_phi(Pipeline& P) {
  const WindingData& w = P.wind();
  std::mt19937_64 rng(static_cast<uint64_t>(P.N) * 1000003ULL + static_cast<uint64_t>(P.p));
  const int64_t range = 1000000;
  int drawn = 0, failures = 0;
  std::string first_failure;
  while (drawn < kPhiSamples) {
    const int64_t a = static_cast<int64_t>(rng() % (2 * range + 1)) - range;
    const int64_t b = static_cast<int64_t>(rng() % range) + 1;
    if (gcd(a, b) != 1 || b % P.N == 0) continue;
    ++drawn;
    const PhiVerdict v = phi_check(w, a, b);
    if (!v.ok) {
      if (failures++ == 0) first_failure = "; first failure at " + std::to_string(a) + "/" + std::to_string(b);
    }
  }
  return verdict("phi_formula", failures == 0,
                 std::to_string(failures) + " failures in " + std::to_string(drawn) + " random a/b" + first_failure);
}

CheckResult check_winding_literal(Pipeline& P) {
  std::size_t ok = 0, both_zero = 0;
  const auto checks = winding_checks(P.wind());
  for (const WindingCheck& c : checks) {
    ok += c.literal_ok;
    both_zero += c.literal_ok && c.lhs == 0;
  }
  std::string d = "e(eta_l) = (l-1) phi(l) holds for " + count_of(ok, checks.size()) + " primes l (" +
                  std::to_string(both_zero) + " of them with both sides 0)";
  return verdict("winding", ok == checks.size(), d);
}

CheckResult check_winding_corrected(Pipeline& P) {
  std::size_t ok = 0;
  const auto checks = winding_checks(P.wind());
  for (const WindingCheck& c : checks) ok += c.corrected_ok;
  return verdict("winding_sign_corrected", ok == checks.size(),
                 "e(eta_l) = -(l-1) phi(l) holds for " + count_of(ok, checks.size()) + " primes l");
}

CheckResult check_winding_identification(Pipeline& P) {
  const WindingData& w = P.wind();
  std::size_t ok = 0;
  const auto checks = winding_checks(w);
  for (const WindingCheck& c : checks) ok += c.identification_ok;
  return verdict("winding_identification", ok == checks.size(),
                 "eta_l -> (l-1) dlog(l) for " + count_of(ok, checks.size()) + " primes l; base eta_" +
                     std::to_string(w.base_ell));
}

CheckResult check_i_i2(Pipeline& P) {
  const EisLocalData& e = P.ideal();
  return verdict("i_mod_i2_order", e.order_i_i2 == e.q && e.i_i2_cyclic,
                 "|I/I^2|_p = " + str(e.order_i_i2) + ", cyclic " + (e.i_i2_cyclic ? "yes" : "no"));
}

CheckResult check_root(Pipeline& P) {
  const EisLocalData& e = P.ideal();
  std::size_t ok = 0, total = 0;
  std::string spot;
  bool spot_ok = true;
  for (int64_t l : primes_up_to(50)) {
    if (l == P.N || mod(l - 1, P.p) == 0) continue;
    ++total;
    const RootCheck r = root_identity(e, l);
    ok += r.holds;
    if (l == 2 && r.scalar_value) {
      spot = "; at l = 2, t^2 - T t + l = " + str(*r.scalar_value);
      BigInt q2 = e.q * e.q;
      spot_ok = *r.scalar_value % q2 == 0;
      spot += spot_ok ? " = 0 mod q^2" : " != 0 mod q^2";
    }
  }
  return verdict("root_identity", ok == total && spot_ok,
                 "holds in (h/I^2)_p for " + count_of(ok, total) + " primes l" + spot);
}

CheckResult check_a_d(Pipeline& P) {
  const AdResult& r = P.a_d();
  const BigInt q = P.ideal().q;
  // Same spaces and operators, larger working modulus.
  OperatorTable known = relative_operators(P.ideal());
  auto wider = std::make_shared<const EisLocalData>(
      eisenstein_ideal(P.ideal().relative, P.ideal().absolute, P.eis_options(P.opts.slack + 1), &known));
  const AdResult r2 = compute_a_d(build_winding(wider), ad_witness_primes(P.ctx, P.opts.witness_bound));
  const bool values = r.a_tilde == q - 1 && r.d_tilde == 1;
  const bool stable = r2.a_tilde == r.a_tilde && r2.d_tilde == r.d_tilde;
  std::string d = "a = " + str(r.a_tilde) + ", d = " + str(r.d_tilde) + " mod " + str(q) + " from " +
                  std::to_string(r.solving.size()) + " agreeing witnesses; slack " + std::to_string(P.opts.slack + 1) +
                  (stable ? " agrees" : " disagrees");
  return verdict("a_d", values && stable && !r.solving.empty(), d);
}

CheckResult check_c(Pipeline& P) {
  const CInvariant& c = P.c_inv();
  const BigInt q = P.ideal().q;
  const bool ok = c.c_tilde == 1 && c.a_mod_q == q - 1;
  return verdict("c_invariant", ok,
                 "F = g^" + str(c.k) + ", a = " + str(c.a) + " = " + str(c.a_mod_q) + " mod q, c = " + str(c.c_tilde));
}

CheckResult check_diagram_(Pipeline& P) {
  const DiagramVerdict v = check_diagram(P.ctx);
  return verdict("diagram", v.ok(),
                 std::to_string(v.mismatches.size()) + " mismatches over " + std::to_string(v.checked) +
                     " adjusted generators");
}

CheckResult check_cusp_killing(Pipeline& P) {
  const CuspKillingWitness w = eis_kills_cusps(P.x1_relative(), kAnnihilationBound);
  return verdict("cusp_killing", w.all_zero,
                 std::to_string(w.generators.size()) + " generators on [u,v]' (uv != 0), boundaries " +
                     (w.all_zero ? "all zero" : "not all zero"));
}

CheckResult check_annihilation(Pipeline& P) {
  const EvidenceReport r = eisenstein_annihilation_evidence(P.ctx, kAnnihilationBound);
  std::size_t checked = 0, nonzero = 0;
  for (const EvidenceLine& l : r.lines) {
    checked += l.checked;
    nonzero += l.nonzero;
  }
  return verdict("annihilation", r.all_zero(),
                 std::to_string(r.lines.size()) + " generators, " + std::to_string(checked) + " evaluations, " +
                     std::to_string(nonzero) + " nonzero",
                 CheckStatus::Evidence);
}

CheckResult check_tensor_identity(Pipeline& P) {
  const WindingData& w = P.wind();
  std::size_t ok = 0;
  bool has2 = false, has3 = false;
  const auto witnesses = default_b_witnesses(P.ctx);
  for (const auto& [l, u, v] : witnesses) {
    const TensorVerdict r = tensor_identity_check(w, l, u, v);
    ok += r.ok;
    has2 |= r.ok && l == 2;
    has3 |= r.ok && l == 3;
  }
  return verdict("tensor_identity", ok == witnesses.size() && ok >= 5 && has2 && has3,
                 "holds for " + count_of(ok, witnesses.size()) + " witnesses (l, u, v)");
}

CheckResult check_descent(Pipeline& P) {
  const DescentVerdict v = descent_check(P.wind());
  return verdict("coinvariant_descent", v.descends && v.kills_ih && v.equals_phi_inverse,
                 std::string("descends ") + (v.descends ? "yes" : "no") + ", kills IH " + (v.kills_ih ? "yes" : "no") +
                     ", inverse to phi " + (v.equals_phi_inverse ? "yes" : "no"));
}

CheckResult check_b(Pipeline& P) {
  const BTranscript& t = P.b_inv();
  std::size_t ok = 0;
  for (const BWitness& w : t.witnesses) ok += w.tensor.ok && w.identification_ok;
  const bool good = t.b_tilde == 1 && t.assumes_annihilation_conjecture && t.assumes_isomorphism_conjecture &&
                    ok == t.witnesses.size();
  return verdict("b_invariant", good,
                 "b = " + str(t.b_tilde) + " from " + count_of(ok, t.witnesses.size()) +
                     " verified witnesses; conditional on two conjectures",
                 CheckStatus::Evidence);
}

CheckResult check_rank_genus(Pipeline& P) {
  const int64_t g = genus_x0_prime(P.N);
  const EisLocalData& e = P.ideal();
  const std::size_t full = P.full().rank();
  const bool ok = full == static_cast<std::size_t>(2 * g) && e.absolute->rank() == static_cast<std::size_t>(g) &&
                  e.relative->rank() == static_cast<std::size_t>(g + 1);
  return verdict("rank_genus", ok,
                 "genus " + std::to_string(g) + "; ranks H " + std::to_string(full) + ", H+ " +
                     std::to_string(e.absolute->rank()) + ", relative H+ " + std::to_string(e.relative->rank()));
}

// x + x S = 0, x + x T + x T^2 = 0 and, on plus spaces, x = x J, each through
// the quotient map, for every Manin symbol.
std::size_t manin_failures(const SymbolSpace& s) {
  const int64_t N = s.level();
  const Curve curve = s.curve();
  auto vanishes = [&](const Chain& c) {
    IntVector x = s.quotient_coordinates(c);
    for (BigInt& v : x) {
      if (s.is_exact() ? v != 0 : v % *s.options().modulus != 0) return false;
    }
    return true;
  };
  std::size_t failures = 0;
  for (const ManinSymbol& m : s.generators()) {
    const int64_t c = m.u, d = m.v;
    Chain two(N, curve), three(N, curve);
    two.add_symbol(c, d, 1);
    two.add_symbol(d, -c, 1);
    three.add_symbol(c, d, 1);
    three.add_symbol(d, -c - d, 1);
    three.add_symbol(-c - d, c, 1);
    failures += !vanishes(two) + !vanishes(three);
    if (s.options().sign != Sign::None) {
      Chain star(N, curve);
      star.add_symbol(c, d, 1);
      star.add_symbol(-c, d, s.options().sign == Sign::Plus ? -1 : 1);
      failures += !vanishes(star);
    }
  }
  return failures;
}

CheckResult check_manin(Pipeline& P) {
  std::vector<const SymbolSpace*> spaces{&P.full(), P.ideal().absolute.get(), P.ideal().relative.get()};
  if (P.N <= kCongruenceMaxLevel) spaces.push_back(&P.x1_relative());
  std::size_t failures = 0, symbols = 0;
  for (const SymbolSpace* s : spaces) {
    failures += manin_failures(*s);
    symbols += s->generators().size();
  }
  return verdict("manin_relations", failures == 0,
                 std::to_string(failures) + " failures over " + std::to_string(symbols) + " symbols in " +
                     std::to_string(spaces.size()) + " spaces");
}

CheckResult check_commutativity(Pipeline& P) {
  const EisLocalData& e = P.ideal();
  std::vector<std::pair<std::string, IntMatrix>> ops;
  for (const auto& [l, m] : e.t_rel) ops.emplace_back("T" + std::to_string(l), m);
  ops.emplace_back("W", e.w_rel);
  ops.emplace_back("U", e.un_rel);
  std::size_t pairs = 0, bad = 0;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      ++pairs;
      bad += ops[i].second * ops[j].second != ops[j].second * ops[i].second;
    }
  // The full space carries the star involution as well.
  const SymbolSpace& full = P.full();
  std::vector<HeckeMatrix> fops{hecke_matrix(full, 2), hecke_matrix(full, 3), atkin_lehner_matrix(full),
                                star_matrix(full)};
  for (std::size_t i = 0; i < fops.size(); ++i)
    for (std::size_t j = i + 1; j < fops.size(); ++j) {
      ++pairs;
      bad += !commute(fops[i], fops[j]);
    }
  const IntMatrix one = IntMatrix::identity(full.rank());
  const bool involutions = fops[2].matrix * fops[2].matrix == one && fops[3].matrix * fops[3].matrix == one;
  return verdict("hecke_commutativity", bad == 0 && involutions,
                 std::to_string(bad) + " non-commuting pairs of " + std::to_string(pairs) + "; W^2 = star^2 = 1 " +
                     (involutions ? "yes" : "no"));
}

CheckResult check_congruence(Pipeline& P) {
  const SymbolSpace& s = P.x1_plus_relative();
  const bool ok = congruence_cross_check(s, 2) && congruence_cross_check(s, 3);
  return verdict("congruence", ok, "checked for l = 2, 3 on " + s.id());
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"structure", check_structure},
      {"projector", check_projector_},
      {"multiplicity_one", check_multiplicity_one},
      {"gorenstein", check_gorenstein},
      {"phi_formula", check_phi},
      {"winding", check_winding_literal},
      {"winding_sign_corrected", check_winding_corrected},
      {"winding_identification", check_winding_identification},
      {"i_mod_i2_order", check_i_i2},
      {"root_identity", check_root},
      {"a_d", check_a_d},
      {"c_invariant", check_c},
      {"diagram", check_diagram_},
      {"cusp_killing", check_cusp_killing},
      {"annihilation", check_annihilation},
      {"tensor_identity", check_tensor_identity},
      {"coinvariant_descent", check_descent},
      {"b_invariant", check_b},
      {"rank_genus", check_rank_genus},
      {"manin_relations", check_manin},
      {"hecke_commutativity", check_commutativity},
      {"congruence", check_congruence},
  };
  return table;
}

bool applies(const std::string& name, int64_t N) { return name != "congruence" || N <= kCongruenceMaxLevel; }

CheckResult guarded(const std::string& name, const CheckFn& fn, Pipeline& P) {
  try {
    return fn(P);
  } catch (const Error& e) {
    return {name, CheckStatus::Fail, describe(e)};
  }
}

json eta_json(const EtaQuotient& e) {
  return {{"r1", str(e.r1)}, {"rN", str(e.rN)}, {"power", str(e.power)}};
}

json kummer_json(const KummerClass& k) {
  json j = json::object();
  for (const auto& [prime, e] : k) j[std::to_string(prime)] = str(e);
  return j;
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Evidence: return "EVIDENCE";
  }
  return "?";
}

int64_t genus_x0_prime(int64_t N) {
  if (!is_prime(N)) throw Error(ErrorCode::NotPrime, kModule, std::to_string(N) + " is not prime");
  if (N == 2 || N == 3) return 0;
  const int64_t nu2 = 1 + legendre(-1, N);
  const int64_t nu3 = 1 + legendre(-3, N);
  // 12 g = 12 + (N + 1) - 3 nu2 - 4 nu3 - 6 * (2 cusps).
  return (N + 1 - 3 * nu2 - 4 * nu3) / 12;
}

EisLocalData load_or_build_eisenstein(const LevelContext& ctx, const EisOptions& eopts,
                                      const std::optional<std::filesystem::path>& cache_dir) {
  const SpaceOptions rel{Curve::X0, RelativeTo::AllCusps, Sign::Plus, std::nullopt};
  const SpaceOptions abs{Curve::X0, RelativeTo::None, Sign::Plus, std::nullopt};
  if (!cache_dir) {
    return eisenstein_ideal(std::make_shared<const SymbolSpace>(SymbolSpace::build(ctx, rel)),
                            std::make_shared<const SymbolSpace>(SymbolSpace::build(ctx, abs)), eopts);
  }
  const std::string rel_key = cache_key(ctx.N, rel), abs_key = cache_key(ctx.N, abs);
  std::optional<CacheEntry> rel_entry = load_cache(*cache_dir, rel_key);
  std::optional<CacheEntry> abs_entry = load_cache(*cache_dir, abs_key);
  auto F = std::make_shared<const SymbolSpace>(rel_entry ? SymbolSpace::from_data(ctx, rel_entry->data)
                                                         : SymbolSpace::build(ctx, rel));
  auto H = std::make_shared<const SymbolSpace>(abs_entry ? SymbolSpace::from_data(ctx, abs_entry->data)
                                                         : SymbolSpace::build(ctx, abs));
  const OperatorTable* known = rel_entry ? &rel_entry->operators : nullptr;
  EisLocalData e = eisenstein_ideal(F, H, eopts, known);
  OperatorTable ops = relative_operators(e);
  if (!rel_entry || rel_entry->operators != ops) {
    if (rel_entry)
      for (const auto& [label, m] : rel_entry->operators) ops.emplace(label, m);
    save_cache(*cache_dir, {kCacheSchema, rel_key, F->data(), ops});
  }
  if (!abs_entry) save_cache(*cache_dir, {kCacheSchema, abs_key, H->data(), {}});
  return e;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckResult run_check(const std::string& name, int64_t N, int64_t p, const ReportOptions& opts) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Pipeline P(N, p, opts);
    if (!applies(name, N))
      throw Error(ErrorCode::InvalidArgument, kModule, name + " is only run for N <= " +
                                                           std::to_string(kCongruenceMaxLevel));
    return guarded(name, fn, P);
  }
  throw Error(ErrorCode::InvalidArgument, kModule, "unknown check " + name);
}

InvariantReport run_report(int64_t N, int64_t p, const ReportOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Pipeline P(N, p, opts);
  InvariantReport r;
  r.N = N;
  r.p = p;
  r.q = P.ctx.q;
  r.f = P.ctx.f;
  r.genus = genus_x0_prime(N);
  r.options = opts;
  for (const auto& [name, fn] : registry())
    if (applies(name, N)) r.checks.push_back(guarded(name, fn, P));

  const EisLocalData& e = P.ideal();
  std::vector<const SymbolSpace*> spaces{e.relative.get(), e.absolute.get(), &P.full(), &P.x1_relative()};
  if (P.x1_plus) spaces.push_back(&*P.x1_plus);
  for (const SymbolSpace* s : spaces) r.spaces.push_back({s->id(), s->rank(), s->fingerprint()});
  r.order_h_i = e.order_h_i;
  r.order_i_i2 = e.order_i_i2;
  r.order_h_i2 = e.order_h_i2;
  r.order_h_ih = e.order_h_ih;
  r.gorenstein_witness = e.gorenstein_witness;
  // Invariants whose check failed by exception are left at their defaults.
  try {
    r.ad = P.a_d();
  } catch (const Error&) {
  }
  try {
    r.c = P.c_inv();
  } catch (const Error&) {
  }
  try {
    r.b = P.b_inv();
  } catch (const Error&) {
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool InvariantReport::any_fail() const {
  for (const CheckResult& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

const CheckResult* InvariantReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json InvariantReport::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["engine_version"] = kEngineVersion;
  j["heilbronn_family"] = kHeilbronnFamily;
  j["N"] = N;
  j["p"] = p;
  j["q"] = q;
  j["f"] = f;
  const LevelContext ctx = build_context(N, p);
  j["xi"] = std::to_string(ctx.xi_num) + "/" + std::to_string(ctx.xi_den);
  j["genus"] = genus;
  j["options"] = {{"slack", options.slack}, {"witness_bound", options.witness_bound}};
  json sp = json::array();
  for (const SpaceSummary& s : spaces) sp.push_back({{"id", s.id}, {"rank", s.rank}, {"fingerprint", s.fingerprint}});
  j["spaces"] = sp;
  j["orders"] = {{"h/I", str(order_h_i)}, {"I/I^2", str(order_i_i2)}, {"h/I^2", str(order_h_i2)},
                 {"H/IH", str(order_h_ih)}};
  j["gorenstein_witness"] = gorenstein_witness ? json(*gorenstein_witness) : json(nullptr);

  j["a_tilde"] = residue(ad.a_tilde, q);
  j["d_tilde"] = residue(ad.d_tilde, q);
  json adw = json::array();
  for (const AdWitness& w : ad.witnesses)
    adw.push_back({{"l", w.ell}, {"a_value", str(w.a_value)}, {"d_value", str(w.d_value)},
                   {"minus_dlog", str(w.minus_dlog)}});
  j["a_d_witnesses"] = adw;

  json cj;
  cj["c_tilde"] = residue(c.c_tilde, q);
  cj["k"] = str(c.k);
  cj["F"] = eta_json(c.F);
  cj["orders"] = {{"zero", str(c.orders.at_zero)}, {"infinity", str(c.orders.at_infinity)}};
  cj["d1_coefficient"] = str(c.d1_coefficient);
  cj["a"] = str(c.a);
  cj["a_mod_q"] = str(c.a_mod_q);
  cj["extension_exponent"] = str(c.extension_exponent);
  json choices = json::array();
  for (const AuxiliaryChoice& a : c.choices)
    choices.push_back({{"name", a.name}, {"h_exponent", str(a.h_exponent)}, {"value_class", kummer_json(a.value_class)}});
  cj["choices"] = choices;
  cj["transcript"] = c.transcript;
  j["c_invariant"] = cj;

  json bj;
  bj["b_tilde"] = residue(b.b_tilde, q);
  bj["flags"] = {{"assumes_annihilation_conjecture", b.assumes_annihilation_conjecture},
                 {"assumes_isomorphism_conjecture", b.assumes_isomorphism_conjecture}};
  bj["caveat"] = b.caveat;
  json bw = json::array();
  for (const BWitness& w : b.witnesses)
    bw.push_back({{"l", w.ell},
                  {"u", w.u},
                  {"v", w.v},
                  {"tensor_ok", w.tensor.ok},
                  {"tensor_lhs", str(w.tensor.lhs)},
                  {"tensor_rhs", str(w.tensor.rhs)},
                  {"winding_value", str(w.winding_value)},
                  {"tensor_value", str(w.tensor_value)},
                  {"identification_ok", w.identification_ok}});
  bj["witnesses"] = bw;
  j["b_invariant"] = bj;

  json cl = json::array();
  for (const CheckResult& c : checks)
    cl.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  j["checks"] = cl;
  return j;
}

std::string InvariantReport::to_markdown() const {
  std::ostringstream os;
  const LevelContext ctx = build_context(N, p);
  os << "# Eisenstein invariants at N = " << N << ", p = " << p << "\n\n";
  os << "| quantity | value |\n|---|---|\n";
  os << "| q | " << q << " (p^" << f << ") |\n";
  os << "| xi | " << ctx.xi_num << "/" << ctx.xi_den << " |\n";
  os << "| genus X0(N) | " << genus << " |\n";
  for (const SpaceSummary& s : spaces) os << "| rank " << s.id << " | " << s.rank << " |\n";
  os << "| \\|h/I\\| | " << order_h_i << " |\n";
  os << "| \\|I/I^2\\| | " << order_i_i2 << " |\n";
  os << "| Gorenstein witness | " << (gorenstein_witness ? "eta_" + std::to_string(*gorenstein_witness) : "none")
     << " |\n";
  auto signed_of = [&](const BigInt& x) { return residue(x, q)["signed"].get<std::string>(); };
  os << "| a~ | " << signed_of(ad.a_tilde) << " |\n";
  os << "| b~ | " << signed_of(b.b_tilde) << " (conditional) |\n";
  os << "| c~ | " << signed_of(c.c_tilde) << " |\n";
  os << "| d~ | " << signed_of(ad.d_tilde) << " |\n";
  os << "| time | " << std::fixed << seconds << " s |\n\n";
  os << "| check | status | detail |\n|---|---|---|\n";
  for (const CheckResult& c : checks) {
    std::string d;
    for (char ch : c.detail) d += ch == '|' ? std::string("\\|") : std::string(1, ch);
    os << "| " << c.name << " | " << status_name(c.status) << " | " << d << " |\n";
  }
  if (!b.caveat.empty()) os << "\nb~ caveat: " << b.caveat << "\n";
  return os.str();
}

}  // namespace eisen
