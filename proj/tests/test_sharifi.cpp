#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/path.hpp"
#include "eisen/sharifi/sharifi.hpp"

#include "test_util.hpp"

using namespace eisen;

namespace {

class Levels : public ::testing::TestWithParam<std::pair<int64_t, int64_t>> {
 protected:
  void SetUp() override {
    auto [N, p] = GetParam();
    ctx = build_context(N, p);
    w = std::make_unique<WindingData>(build_winding(std::make_shared<const EisLocalData>(eisenstein_ideal(ctx))));
  }
  LevelContext ctx;
  std::unique_ptr<WindingData> w;
};

}  // namespace

TEST_P(Levels, BoundaryFromLiftsMatchesOmega) {
  // [u,v]' runs from -d/(Nb) to -c/(Na); both cusps lie over infinity with t = numerator.
  const int64_t N = ctx.N;
  for (int64_t u = 1; u < N; ++u)
    for (int64_t v = 1; v < N; ++v) {
      const SL2Lift L = lift_to_sl2(N, u, v);
      const CuspClass end = classify_cusp(Curve::X1, N, -L.c, N * L.a);
      const CuspClass start = classify_cusp(Curve::X1, N, -L.d, N * L.b);
      ASSERT_FALSE(end.over_zero);
      ASSERT_FALSE(start.over_zero);
      const int64_t t = mod(ctx.u_class(end.label) - ctx.u_class(start.label), ctx.q);
      EXPECT_EQ(t, boundary_omega(ctx, u, v).value()) << u << "," << v;
    }
}

TEST_P(Levels, DiagramCommutes) {
  const DiagramVerdict d = check_diagram(ctx);
  EXPECT_TRUE(d.ok());
  EXPECT_EQ(d.checked, static_cast<std::size_t>((ctx.N - 1) * (ctx.N - 1)));
}

TEST_P(Levels, AnnihilationEvidence) {
  const EvidenceReport r = eisenstein_annihilation_evidence(ctx, 20);
  EXPECT_TRUE(r.all_zero());
  EXPECT_FALSE(r.lines.empty());
  for (const EvidenceLine& l : r.lines) EXPECT_GT(l.checked, 0u) << l.generator;
}

TEST_P(Levels, TensorIdentityAndB) {
  const auto witnesses = default_b_witnesses(ctx);
  ASSERT_GE(witnesses.size(), 5u);
  bool has2 = false, has3 = false;
  for (const auto& [l, u, v] : witnesses) {
    const TensorVerdict r = tensor_identity_check(*w, l, u, v);
    EXPECT_TRUE(r.ok) << l << " " << u << " " << v;
    EXPECT_TRUE(r.absolute);
    has2 |= l == 2;
    has3 |= l == 3;
  }
  EXPECT_TRUE(has2 && has3);
  const BTranscript b = compute_b_invariant(*w, witnesses);
  EXPECT_EQ(b.b_tilde, 1);
  EXPECT_TRUE(b.assumes_annihilation_conjecture);
  EXPECT_TRUE(b.assumes_isomorphism_conjecture);
  EXPECT_FALSE(b.caveat.empty());
  for (const BWitness& x : b.witnesses) EXPECT_TRUE(x.identification_ok) << x.ell;
}

TEST_P(Levels, CoinvariantDescent) {
  const DescentVerdict v = descent_check(*w);
  EXPECT_TRUE(v.descends);
  EXPECT_TRUE(v.kills_ih);
  EXPECT_TRUE(v.equals_phi_inverse);
}

INSTANTIATE_TEST_SUITE_P(Acceptance, Levels,
                         ::testing::Values(std::pair<int64_t, int64_t>{11, 5}, std::pair<int64_t, int64_t>{23, 11},
                                           std::pair<int64_t, int64_t>{29, 7}, std::pair<int64_t, int64_t>{31, 5},
                                           std::pair<int64_t, int64_t>{41, 5}));

TEST(Sharifi, PushforwardForgetsTheSign) {
  Chain c(11, Curve::X1);
  c.add_symbol(3, 4, 2);
  const Chain x = pushforward(c);
  Chain expect(11, Curve::X0);
  expect.add_symbol(3, 4, 2);
  EXPECT_EQ(x, expect.normalize());
  EXPECT_EISEN_ERROR(pushforward(expect), ErrorCode::InvalidArgument);
}

TEST(Sharifi, CuspMapAndErrors) {
  const LevelContext ctx = build_context(11, 5);
  EXPECT_EQ(t_of_cusp(ctx, 2, 11).value(), 1);
  EXPECT_EISEN_ERROR(t_of_cusp(ctx, 2, 3), ErrorCode::NotOverInfinity);
  EXPECT_EISEN_ERROR(boundary_omega(ctx, 0, 1), ErrorCode::ZeroCoordinate);
  CuspDivisor d;
  add_to_divisor(d, classify_cusp(Curve::X1, 11, 1, 1), 1);
  EXPECT_EISEN_ERROR(t_map(ctx, d), ErrorCode::NotOverInfinity);
  AdjustedChain ch{11, {{2, 1, 1}, {3, 1, -1}}};
  EXPECT_EQ(boundary_omega(ctx, ch), boundary_omega(ctx, 2, 3));
}

TEST(Sharifi, SmallWitnessSet) {
  const LevelContext ctx = build_context(11, 5);
  const WindingData w = build_winding(std::make_shared<const EisLocalData>(eisenstein_ideal(ctx)));
  const BTranscript b = compute_b_invariant(w, {{2, 2, 1}, {3, 2, 1}});
  EXPECT_EQ(b.b_tilde, 1);
  EXPECT_TRUE(b.assumes_annihilation_conjecture && b.assumes_isomorphism_conjecture);
  EXPECT_EISEN_ERROR(compute_b_invariant(w, {}), ErrorCode::InvalidArgument);
  EXPECT_EISEN_ERROR(tensor_identity_check(w, 11, 2, 1), ErrorCode::BadPrime);
}

TEST(Sharifi, CongruenceOfGenerators) {
  const LevelContext ctx = build_context(11, 5);
  const SymbolSpace S = SymbolSpace::build(ctx, {Curve::X1, RelativeTo::CInfinity, Sign::Plus, 1000003});
  EXPECT_TRUE(congruence_cross_check(S, 2));
  EXPECT_TRUE(congruence_cross_check(S, 3));
}
