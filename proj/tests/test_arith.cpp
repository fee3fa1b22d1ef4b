#include "eisen/arith/dlog.hpp"
#include "eisen/arith/finite_quotient.hpp"
#include "eisen/arith/level_context.hpp"
#include "eisen/arith/normal_form.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/arith/twisted_unit.hpp"
#include "eisen/util/sha256.hpp"

#include "test_util.hpp"

#include <random>

using namespace eisen;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int64_t bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<int64_t>(rng() % (2 * bound + 1)) - bound);
  return m;
}

}  // namespace

TEST(NumberTheory, PrimesAndFactors) {
  EXPECT_EQ(primes_up_to(30), (std::vector<int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  for (int64_t n = 2; n < 2000; ++n) {
    int64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    EXPECT_EQ(prod, n);
  }
}

TEST(NumberTheory, InverseAndPower) {
  for (int64_t m : {7, 25, 101, 1000003}) {
    for (int64_t a = 1; a < 60; ++a) {
      if (gcd(a, m) != 1) continue;
      EXPECT_EQ(mul_mod(a, inv_mod(a, m), m), 1);
    }
  }
  EXPECT_EQ(pow_mod(3, 200, 1000003), pow_mod(pow_mod(3, 100, 1000003), 2, 1000003));
  EXPECT_EISEN_ERROR(inv_mod(5, 25), ErrorCode::InvalidArgument);
}

TEST(NumberTheory, PrimitiveRoots) {
  const std::map<int64_t, int64_t> known{{11, 2}, {23, 5}, {29, 2}, {31, 3}, {41, 6}, {101, 2}};
  for (auto [N, g] : known) EXPECT_EQ(smallest_primitive_root(N), g) << N;
}

TEST(DiscreteLog, MatchesExhaustivePowers) {
  for (int64_t N : primes_up_to(400)) {
    if (N < 3) continue;
    const DiscreteLog L(N, smallest_primitive_root(N));
    int64_t x = 1;
    for (int64_t e = 0; e < N - 1; ++e) {
      EXPECT_EQ(L(x), e);
      x = x * L.generator() % N;
    }
    EXPECT_EISEN_ERROR(L(N), ErrorCode::ZeroArgument);
  }
}

TEST(DiscreteLog, LargeModulusRoundTrip) {
  const int64_t N = 1000003;
  const DiscreteLog L(N, smallest_primitive_root(N));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int64_t e = static_cast<int64_t>(rng() % (N - 1));
    EXPECT_EQ(L(pow_mod(L.generator(), e, N)), e);
  }
}

TEST(LevelContext, Fields) {
  const LevelContext c = build_context(11, 5);
  EXPECT_EQ(c.q, 5);
  EXPECT_EQ(c.f, 1);
  EXPECT_EQ(c.xi_num, 5);
  EXPECT_EQ(c.xi_den, 6);
  EXPECT_EQ(c.v, 1);
  EXPECT_EQ(c.r_tilde, 1);
  EXPECT_EQ(c.generator, 2);

  const LevelContext d = build_context(101, 5);
  EXPECT_EQ(d.q, 25);
  EXPECT_EQ(d.f, 2);
  EXPECT_EQ(d.xi_num, 25);
  EXPECT_EQ(d.xi_den, 3);
  EXPECT_EQ(d.r_tilde, 17);  // 3^-1 mod 25
  EXPECT_EQ(d.v_tilde, 1);
}

TEST(LevelContext, XiIdentityAcrossLevels) {
  for (int64_t N : primes_up_to(400)) {
    for (auto [p, e] : factorize(N - 1)) {
      if (p < 5) continue;
      const LevelContext c = build_context(N, p);
      EXPECT_EQ(c.xi_num * 12, c.xi_den * (N - 1));
      EXPECT_EQ(gcd(c.xi_num, c.xi_den), 1);
      EXPECT_EQ(mod(c.v * c.v_tilde, c.q), 1 % c.q);
      EXPECT_EQ(mod(c.r_tilde * c.xi_den, c.q), mod(c.v, c.q));
      EXPECT_EQ((N - 1) % c.q, 0);
      EXPECT_NE(((N - 1) / c.q) % p, 0);
    }
  }
}

TEST(LevelContext, Rejections) {
  EXPECT_EISEN_ERROR(build_context(11, 7), ErrorCode::PDoesNotDivide);
  EXPECT_EISEN_ERROR(build_context(12, 5), ErrorCode::NotPrime);
  EXPECT_EISEN_ERROR(build_context(7, 3), ErrorCode::SmallPrime);
}

TEST(TwistedUnit, HomomorphismFromResidues) {
  const LevelContext c = build_context(41, 5);
  for (int64_t x = 1; x < 41; ++x)
    for (int64_t y = 1; y < 41; ++y)
      EXPECT_EQ(TwistedUnit::of_residue(c, x * y % 41), TwistedUnit::of_residue(c, x) + TwistedUnit::of_residue(c, y));
  EXPECT_EQ(TwistedUnit::of_residue(c, c.generator).value(), 1);
  const TwistedUnit a(5, 2, 1, 0), b(5, 3, 0, 1);
  EXPECT_EQ(a.tensor(b).value(), 1);
  EXPECT_EQ(a.tensor(b).u_weight(), 1);
  EXPECT_EQ(a.tensor(b).mu_weight(), 1);
  EXPECT_THROW(a + b, Error);
}

TEST(NormalForm, HermiteProperties) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix M = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 9);
    const HermiteForm h = hermite_form(M);
    EXPECT_EQ(h.U * M, h.H);
    BigInt det = h.U.determinant();
    EXPECT_TRUE(det == 1 || det == -1);
    for (std::size_t i = 0; i < h.rank; ++i) {
      const BigInt pivot = h.H(i, h.pivot_cols[i]);
      EXPECT_GT(pivot, 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.H(k, h.pivot_cols[i]), 0);
        EXPECT_LT(h.H(k, h.pivot_cols[i]), pivot);
      }
    }
  }
}

TEST(NormalForm, SmithKnownExample) {
  const IntMatrix M = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  const SmithForm s = smith_form(M);
  EXPECT_EQ(s.diagonal, (std::vector<BigInt>{2, 6, 12}));
  EXPECT_EQ(s.U * M * s.V, s.D);
}

TEST(NormalForm, SmithDivisibilityAndDeterminant) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix M = random_matrix(rng, n, n, 7);
    const SmithForm s = smith_form(M);
    EXPECT_EQ(s.U * M * s.V, s.D);
    BigInt prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      prod *= s.diagonal[i];
      if (i + 1 < n && s.diagonal[i + 1] != 0) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
    }
    BigInt det = M.determinant();
    EXPECT_EQ(prod, det < 0 ? BigInt(-det) : det);
  }
}

TEST(NormalForm, KernelsAndSolve) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix M = random_matrix(rng, 2 + rng() % 5, 1 + rng() % 4, 6);
    const IntMatrix K = left_kernel(M);
    EXPECT_TRUE((K * M).is_zero());
    EXPECT_EQ(K.rows() + hermite_form(M, false).rank, M.rows());
    const IntMatrix R = right_kernel(M);
    if (R.cols() > 0) EXPECT_TRUE((M * R).is_zero());
    IntVector x(M.rows());
    for (BigInt& e : x) e = static_cast<int64_t>(rng() % 11) - 5;
    const IntVector b = M.left_apply(x);
    const auto sol = solve_left(M, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(M.left_apply(*sol), b);
  }
  const IntMatrix two = IntMatrix::from_rows({{2}}, 1);
  EXPECT_FALSE(solve_left(two, {BigInt(1)}).has_value());
}

TEST(NormalForm, HowellOverResidues) {
  // Span of (4) over Z/12 is {0,4,8}; (6) adds {0,6}; together they give (2).
  const IntMatrix M = IntMatrix::from_rows({{4}, {6}}, 1, BigInt(12));
  const IntMatrix H = howell_form(M);
  ASSERT_EQ(H.rows(), 1u);
  EXPECT_EQ(H(0, 0), 2);
  const IntMatrix K = left_kernel(M);
  EXPECT_TRUE((K * M).is_zero());
}

TEST(LatticeQuotient, InvariantsAndCoordinates) {
  const IntMatrix A = IntMatrix::identity(2);
  const IntMatrix B = IntMatrix::from_rows({{2, 0}, {0, 6}}, 2);
  const LatticeQuotient Q(A, B);
  EXPECT_EQ(Q.invariant_factors(), (std::vector<BigInt>{2, 6}));
  EXPECT_EQ(Q.p_order(2), 4);
  EXPECT_EQ(Q.p_order(3), 3);
  EXPECT_FALSE(Q.p_cyclic(2));
  EXPECT_TRUE(Q.p_cyclic(3));
  EXPECT_TRUE(Q.p_trivial({BigInt(2), BigInt(6)}, 2));
  EXPECT_FALSE(Q.p_trivial({BigInt(0), BigInt(2)}, 3));
  EXPECT_FALSE(Q.has_free_part());
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
