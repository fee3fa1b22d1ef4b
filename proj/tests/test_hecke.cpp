#include "eisen/arith/number_theory.hpp"
#include "eisen/hecke/eisenstein.hpp"

#include "test_util.hpp"

using namespace eisen;

namespace {

// a_l of the curve y^2 + y = x^3 - x^2 - 10x - 20 of conductor 11, by point count.
int64_t a_ell_11a(int64_t l) {
  int64_t affine = 0;
  for (int64_t x = 0; x < l; ++x)
    for (int64_t y = 0; y < l; ++y) {
      const int64_t lhs = mod(y * y + y, l);
      const int64_t rhs = mod(x * x % l * x - x * x - 10 * x - 20, l);
      affine += lhs == rhs;
    }
  return l + 1 - (affine + 1);
}

int64_t p_part(int64_t n, int64_t p) {
  int64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

SymbolSpace x0(int64_t N, int64_t p, RelativeTo r, Sign s) {
  return SymbolSpace::build(build_context(N, p), {Curve::X0, r, s, std::nullopt});
}

const std::vector<std::pair<int64_t, int64_t>> kLevels{{11, 5}, {23, 11}, {29, 7}, {31, 5}, {41, 5}};

}  // namespace

TEST(Heilbronn, DeterminantsAndCache) {
  for (int64_t n : {2, 3, 5, 7, 13}) {
    const auto& h = heilbronn_cached(n);
    EXPECT_FALSE(h.empty());
    for (const Heilbronn& m : h) EXPECT_EQ(m.a * m.d - m.b * m.c, n);
    EXPECT_EQ(h.size(), heilbronn_merel(n).size());
  }
}

TEST(Hecke, EigenvaluesOnConductor11MatchPointCounts) {
  const SymbolSpace S = x0(11, 5, RelativeTo::None, Sign::Plus);
  ASSERT_EQ(S.rank(), 1u);
  for (int64_t l : primes_up_to(60)) {
    if (l == 11) continue;
    EXPECT_EQ(hecke_matrix(S, l).matrix(0, 0), a_ell_11a(l)) << l;
  }
}

TEST(Hecke, TracesOnFullSpaceLevel11) {
  const SymbolSpace S = x0(11, 5, RelativeTo::None, Sign::None);
  EXPECT_EQ(hecke_matrix(S, 2).matrix.trace(), -4);
  EXPECT_EQ(hecke_matrix(S, 3).matrix.trace(), -2);
  EXPECT_EQ(atkin_lehner_matrix(S).matrix.trace(), -2);
}

TEST(Hecke, Level23NewformField) {
  // The plus part is a single Galois orbit with a_2 = (-1 +- sqrt 5)/2.
  const IntMatrix T = hecke_matrix(x0(23, 11, RelativeTo::None, Sign::Plus), 2).matrix;
  EXPECT_EQ(T.trace(), -1);
  EXPECT_EQ(T.determinant(), -1);
}

TEST(Hecke, EisensteinEigenvalueOnRelativeSpace) {
  for (auto [N, p] : kLevels) {
    const SymbolSpace F = x0(N, p, RelativeTo::AllCusps, Sign::Plus);
    const IntMatrix one = IntMatrix::identity(F.rank());
    for (int64_t l : {2, 3, 5, 7}) {
      if (l == N) continue;
      EXPECT_EQ((hecke_matrix(F, l).matrix - one.scaled(1 + l)).determinant(), 0) << N << " " << l;
    }
  }
}

TEST(Hecke, CommutativityAndInvolutions) {
  for (auto [N, p] : kLevels) {
    const SymbolSpace S = x0(N, p, RelativeTo::AllCusps, Sign::None);
    std::vector<HeckeMatrix> ops{hecke_matrix(S, 2), hecke_matrix(S, 3), hecke_matrix(S, 13), un_matrix(S),
                                 atkin_lehner_matrix(S), star_matrix(S)};
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = 0; j < ops.size(); ++j) EXPECT_TRUE(commute(ops[i], ops[j])) << ops[i].label() << ops[j].label();
    const IntMatrix one = IntMatrix::identity(S.rank());
    EXPECT_EQ(ops[4].matrix * ops[4].matrix, one);
    EXPECT_EQ(ops[5].matrix * ops[5].matrix, one);
  }
}

TEST(Hecke, DiamondsFormAGroupOnX1) {
  const int64_t N = 11;
  const SymbolSpace S =
      SymbolSpace::build(build_context(N, 5), {Curve::X1, RelativeTo::CInfinity, Sign::None, 1000003});
  const IntMatrix d2 = diamond_matrix(S, 2).matrix, d3 = diamond_matrix(S, 3).matrix;
  EXPECT_EQ(d2 * d3, diamond_matrix(S, 6).matrix);
  EXPECT_EQ(diamond_matrix(S, N - 1).matrix, IntMatrix::identity(S.rank(), BigInt(1000003)));
  EXPECT_TRUE(commute(hecke_matrix(S, 2), diamond_matrix(S, 2)));
  // T_2 on X1(11): two copies of the newform with a_2 = -2 on H_1, trace -4.
  const SymbolSpace H = SymbolSpace::build(build_context(N, 5), {Curve::X1, RelativeTo::None, Sign::None, 1000003});
  EXPECT_EQ(hecke_matrix(H, 2).matrix.trace(), 1000003 - 4);
}

TEST(Hecke, Errors) {
  const SymbolSpace S = x0(11, 5, RelativeTo::None, Sign::None);
  EXPECT_EISEN_ERROR(hecke_matrix(S, 11), ErrorCode::BadPrime);
  EXPECT_EISEN_ERROR(hecke_matrix(S, 4), ErrorCode::BadPrime);
  EXPECT_EISEN_ERROR(commute(hecke_matrix(S, 2), hecke_matrix(x0(11, 5, RelativeTo::None, Sign::Plus), 2)),
                     ErrorCode::LevelMismatch);
}

TEST(EisensteinIdeal, OrdersMatchNumerator) {
  for (auto [N, p] : kLevels) {
    const LevelContext ctx = build_context(N, p);
    const EisLocalData e = eisenstein_ideal(ctx);
    // |h/I| is the numerator of (N - 1)/12; compare p-parts.
    const int64_t num = (N - 1) / gcd(N - 1, 12);
    const int64_t q = p_part(num, p);
    EXPECT_EQ(e.q, q);
    EXPECT_EQ(e.order_h_i, q);
    EXPECT_EQ(e.order_i_i2, q);
    EXPECT_EQ(e.order_h_i2, q * q);
    EXPECT_EQ(e.order_h_ih, q);
    EXPECT_TRUE(e.i_i2_cyclic);
    EXPECT_TRUE(e.h_ih_cyclic);
    ASSERT_TRUE(e.gorenstein_witness.has_value());
    EXPECT_LE(*e.gorenstein_witness, 50);
    for (const auto& [l, m] : e.eta_abs) EXPECT_TRUE(e.in_ideal_p(m)) << l;
    EXPECT_TRUE(e.in_ideal_p(e.w1_abs));
    EXPECT_FALSE(e.in_ideal_p(IntMatrix::identity(e.absolute->rank())));
  }
}

TEST(EisensteinIdeal, ProjectorProperties) {
  for (auto [N, p] : kLevels) {
    const ProjectorChecks c = check_projector(eisenstein_ideal(build_context(N, p)));
    EXPECT_TRUE(c.idempotent);
    EXPECT_TRUE(c.w_is_minus_one);
    EXPECT_TRUE(c.un_is_one);
    EXPECT_TRUE(c.nonzero);
  }
}

TEST(EisensteinIdeal, KnownOperatorsAreReused) {
  const LevelContext ctx = build_context(29, 7);
  const EisLocalData a = eisenstein_ideal(ctx);
  const OperatorTable table = relative_operators(a);
  const EisLocalData b = eisenstein_ideal(a.relative, a.absolute, a.options, &table);
  EXPECT_EQ(b.projector, a.projector);
  EXPECT_EQ(b.order_h_i2, a.order_h_i2);
  OperatorTable bad = table;
  bad["T2"] = IntMatrix::identity(1);
  EXPECT_EISEN_ERROR(eisenstein_ideal(a.relative, a.absolute, a.options, &bad), ErrorCode::CacheError);
}

TEST(EisensteinIdeal, RejectsWrongSpaces) {
  const LevelContext ctx = build_context(11, 5);
  auto H = std::make_shared<const SymbolSpace>(x0(11, 5, RelativeTo::None, Sign::Plus));
  EXPECT_EISEN_ERROR(eisenstein_ideal(H, H), ErrorCode::InvalidArgument);
}

TEST(EisensteinIdeal, KillsCuspsOnX1) {
  for (int64_t N : {11, 23, 31}) {
    const int64_t p = N == 23 ? 11 : 5;
    const SymbolSpace S =
        SymbolSpace::build(build_context(N, p), {Curve::X1, RelativeTo::CInfinity, Sign::None, 1000003});
    const CuspKillingWitness w = eis_kills_cusps(S, 20);
    EXPECT_TRUE(w.all_zero) << N;
    EXPECT_FALSE(w.generators.empty());
  }
}
