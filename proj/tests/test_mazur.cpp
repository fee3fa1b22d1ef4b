#include "eisen/arith/number_theory.hpp"
#include "eisen/mazur/winding.hpp"

#include "test_util.hpp"

#include <random>

using namespace eisen;

namespace {

std::shared_ptr<const EisLocalData> ideal(int64_t N, int64_t p) {
  return std::make_shared<const EisLocalData>(eisenstein_ideal(build_context(N, p)));
}

class Levels : public ::testing::TestWithParam<std::pair<int64_t, int64_t>> {
 protected:
  void SetUp() override {
    auto [N, p] = GetParam();
    ctx = build_context(N, p);
    w = std::make_unique<WindingData>(build_winding(ideal(N, p)));
  }
  LevelContext ctx;
  std::unique_ptr<WindingData> w;
};

}  // namespace

TEST_P(Levels, PhiFormulaOnRandomFractions) {
  std::mt19937_64 rng(static_cast<uint64_t>(ctx.N));
  int checked = 0;
  while (checked < 60) {
    const int64_t b = 1 + static_cast<int64_t>(rng() % 100000);
    const int64_t a = static_cast<int64_t>(rng() % 200001) - 100000;
    if (gcd(a, b) != 1 || b % ctx.N == 0) continue;
    ++checked;
    const PhiVerdict v = phi_check(*w, a, b);
    EXPECT_TRUE(v.ok) << a << "/" << b;
    // The class depends on b only through b mod N.
    EXPECT_EQ(v.rhs, mod(-ctx.dlog(b), ctx.q));
  }
}

TEST_P(Levels, PhiNormalizedOnGenerator) {
  const int64_t ginv = inv_mod(ctx.generator, ctx.N);
  // phi(x) is the class of {0, 1/b} with b = x^-1, so phi(g) comes from b = g^-1.
  EXPECT_EQ(w->phi_table[static_cast<std::size_t>(ctx.generator)], 1);
  EXPECT_EQ(phi_check(*w, 1, ginv).lhs, 1);
}

TEST_P(Levels, WindingSignAndIdentification) {
  for (const WindingCheck& c : winding_checks(*w)) {
    EXPECT_TRUE(c.corrected_ok) << c.ell;
    EXPECT_TRUE(c.identification_ok) << c.ell;
    EXPECT_EQ(mod_floor(c.literal_rhs + c.corrected_rhs, BigInt(ctx.q)), 0);
    // With the phi normalization above, the literal form holds only where both sides vanish.
    if (c.literal_ok) EXPECT_EQ(c.lhs, 0) << c.ell;
  }
}

TEST_P(Levels, FrobeniusRootIdentity) {
  const EisLocalData& e = *w->eis;
  for (int64_t l : primes_up_to(50)) {
    if (l == ctx.N || mod(l - 1, ctx.p) == 0) continue;
    EXPECT_TRUE(root_identity(e, l).holds) << l;
  }
  for (int64_t l : primes_up_to(50))
    if (l != ctx.N && mod(l - 1, ctx.p) == 0) EXPECT_EISEN_ERROR(root_identity(e, l), ErrorCode::BadPrime);
}

TEST_P(Levels, InvariantsAandD) {
  const AdResult r = compute_a_d(*w, ad_witness_primes(ctx, 50));
  EXPECT_EQ(r.a_tilde, ctx.q - 1);
  EXPECT_EQ(r.d_tilde, 1);
  EXPECT_FALSE(r.solving.empty());
  // Each single witness gives the same answer.
  for (int64_t l : r.solving) {
    const AdResult one = compute_a_d(*w, {l});
    EXPECT_EQ(one.a_tilde, r.a_tilde) << l;
    EXPECT_EQ(one.d_tilde, r.d_tilde) << l;
  }
}

INSTANTIATE_TEST_SUITE_P(Acceptance, Levels,
                         ::testing::Values(std::pair<int64_t, int64_t>{11, 5}, std::pair<int64_t, int64_t>{23, 11},
                                           std::pair<int64_t, int64_t>{29, 7}, std::pair<int64_t, int64_t>{31, 5},
                                           std::pair<int64_t, int64_t>{41, 5}));

TEST(Winding, SpotValueAtLevel11) {
  // t = 6 at l = 2: 6^2 - (-2)(6) + 2 = 50.
  const RootCheck r = root_identity(*ideal(11, 5), 2);
  ASSERT_TRUE(r.scalar_value.has_value());
  EXPECT_EQ(*r.scalar_value, 50);
  EXPECT_EQ(mod_floor(r.u, BigInt(5)), 1);
  EXPECT_TRUE(r.holds);
}

TEST(Winding, WitnessPrimes) {
  EXPECT_EQ(ad_witness_primes(build_context(11, 5), 50),
            (std::vector<int64_t>{2, 3, 7, 13, 17, 19, 23, 29, 37, 43, 47}));
}

TEST(Winding, Errors) {
  const WindingData w = build_winding(ideal(11, 5));
  EXPECT_EISEN_ERROR(compute_a_d(w, {11}), ErrorCode::BadPrime);
  EXPECT_EISEN_ERROR(compute_a_d(w, {31}), ErrorCode::BadPrime);
  EXPECT_EISEN_ERROR(winding_apply(w, IntMatrix::identity(w.eis->relative->rank())), ErrorCode::NotInIdeal);
  EXPECT_EISEN_ERROR(phi_check(w, 2, 4), ErrorCode::InvalidArgument);
}
