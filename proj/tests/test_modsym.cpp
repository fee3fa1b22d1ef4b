#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/path.hpp"
#include "eisen/modsym/symbol_space.hpp"

#include "test_util.hpp"

#include <random>

using namespace eisen;

namespace {

// Genus of X0(N), N prime, by Riemann-Hurwitz.
int64_t genus_x0(int64_t N) {
  const int64_t e2 = 1 + legendre(-1, N), e3 = 1 + legendre(-3, N);
  return (N + 1 - 3 * e2 - 4 * e3) / 12;
}

// Genus of X1(N), N >= 5 prime.
int64_t genus_x1(int64_t N) { return (N - 5) * (N - 7) / 24; }

SymbolSpace space(int64_t N, Curve c, RelativeTo r, Sign s, std::optional<int64_t> m = std::nullopt) {
  return SymbolSpace::build(build_context(N, [&] {
                              for (auto [p, e] : factorize(N - 1))
                                if (p >= 5) return p;
                              return int64_t{0};
                            }()),
                            {c, r, s, m});
}

bool quotient_zero(const SymbolSpace& S, const Chain& c) {
  for (const BigInt& x : S.quotient_coordinates(c)) {
    if (S.is_exact() ? x != 0 : x % *S.options().modulus != 0) return false;
  }
  return true;
}

}  // namespace

TEST(ManinSymbols, Counts) {
  for (int64_t N : {11, 23, 29, 31}) {
    EXPECT_EQ(symbol_count(Curve::X0, N), static_cast<std::size_t>(N + 1));
    EXPECT_EQ(symbol_count(Curve::X1, N), static_cast<std::size_t>((N * N - 1) / 2));
    const auto gens = manin_generators(Curve::X1, N);
    for (std::size_t i = 0; i < gens.size(); ++i) EXPECT_EQ(symbol_index(Curve::X1, N, gens[i].u, gens[i].v), i);
  }
}

TEST(ManinSymbols, Normalization) {
  EXPECT_EQ(gamma0_symbol(11, 3, 6), gamma0_symbol(11, 1, 2));
  EXPECT_EQ(gamma1_symbol(11, 3, 4), gamma1_symbol(11, -3, -4));
  EXPECT_EISEN_ERROR(gamma0_symbol(11, 0, 0), ErrorCode::InvalidArgument);
  EXPECT_EISEN_ERROR(gamma1_symbol(11, 11, 0), ErrorCode::InvalidArgument);
}

class PrimeLevels : public ::testing::TestWithParam<int64_t> {};

TEST_P(PrimeLevels, X0RanksMatchGenus) {
  const int64_t N = GetParam(), g = genus_x0(N);
  EXPECT_EQ(space(N, Curve::X0, RelativeTo::None, Sign::None).rank(), static_cast<std::size_t>(2 * g));
  EXPECT_EQ(space(N, Curve::X0, RelativeTo::None, Sign::Plus).rank(), static_cast<std::size_t>(g));
  EXPECT_EQ(space(N, Curve::X0, RelativeTo::None, Sign::Minus).rank(), static_cast<std::size_t>(g));
  EXPECT_EQ(space(N, Curve::X0, RelativeTo::AllCusps, Sign::None).rank(), static_cast<std::size_t>(2 * g + 1));
  EXPECT_EQ(space(N, Curve::X0, RelativeTo::AllCusps, Sign::Plus).rank(), static_cast<std::size_t>(g + 1));
}

TEST_P(PrimeLevels, ManinRelationsHoldInQuotient) {
  const int64_t N = GetParam();
  for (Sign s : {Sign::None, Sign::Plus}) {
    const SymbolSpace S = space(N, Curve::X0, RelativeTo::AllCusps, s);
    for (const ManinSymbol& m : S.generators()) {
      Chain two(N, Curve::X0), three(N, Curve::X0);
      two.add_symbol(m.u, m.v, 1);
      two.add_symbol(m.v, -m.u, 1);
      three.add_symbol(m.u, m.v, 1);
      three.add_symbol(m.v, -m.u - m.v, 1);
      three.add_symbol(-m.u - m.v, m.u, 1);
      EXPECT_TRUE(quotient_zero(S, two)) << m.to_string();
      EXPECT_TRUE(quotient_zero(S, three)) << m.to_string();
    }
  }
}

TEST_P(PrimeLevels, BoundaryOfPathsIsEndpointDifference) {
  const int64_t N = GetParam();
  const SymbolSpace S = space(N, Curve::X0, RelativeTo::AllCusps, Sign::None);
  std::mt19937_64 rng(static_cast<uint64_t>(N));
  for (int t = 0; t < 50; ++t) {
    const int64_t b = 1 + static_cast<int64_t>(rng() % 500);
    const int64_t a = static_cast<int64_t>(rng() % 1001) - 500;
    if (gcd(a, b) != 1 || b % N == 0) continue;
    // Both a/b and 0 are Gamma0(N)-equivalent to 0, so the boundary vanishes.
    EXPECT_TRUE(divisor_is_zero(S.boundary(path_symbol(Curve::X0, N, a, b))));
  }
  // {0, oo} joins the two cusps.
  const CuspDivisor d = S.boundary(path_chain(Curve::X0, N, 1, 0));
  EXPECT_EQ(divisor_degree(d), 0);
  EXPECT_FALSE(divisor_is_zero(d));
  EXPECT_EISEN_ERROR(path_symbol(Curve::X0, N, 1, N), ErrorCode::DenominatorSharesFactor);
}

TEST_P(PrimeLevels, RestrictedAndUnrestrictedPathsAgree) {
  const int64_t N = GetParam();
  const SymbolSpace S = space(N, Curve::X0, RelativeTo::AllCusps, Sign::None);
  for (auto [a, b] : std::vector<std::pair<int64_t, int64_t>>{{3, 7}, {5, 13}, {-4, 9}, {17, 20}}) {
    const auto conv = convergents(a, b);
    ASSERT_FALSE(conv.empty());
    const Chain whole = path_symbol(Curve::X0, N, a, b);
    const IntVector x = S.quotient_coordinates(whole);
    const IntVector y = S.quotient_coordinates(path_chain(Curve::X0, N, a, b));
    EXPECT_EQ(x, y);
  }
}

TEST_P(PrimeLevels, PresentationRoundTrip) {
  const int64_t N = GetParam();
  const SymbolSpace S = space(N, Curve::X0, RelativeTo::AllCusps, Sign::Plus);
  const SymbolSpace T = SymbolSpace::from_data(S.context(), S.data());
  EXPECT_EQ(S.fingerprint(), T.fingerprint());
  EXPECT_EQ(S.basis(), T.basis());
  EXPECT_EQ(S.fingerprint(), space(N, Curve::X0, RelativeTo::AllCusps, Sign::Plus).fingerprint());
  EXPECT_NE(S.fingerprint(), space(N, Curve::X0, RelativeTo::None, Sign::Plus).fingerprint());
}

INSTANTIATE_TEST_SUITE_P(Levels, PrimeLevels, ::testing::Values(11, 23, 29, 31, 41, 43, 61, 101));

TEST(X1Spaces, RanksMatchGenusAndCusps) {
  for (int64_t N : {11, 23, 29}) {
    const int64_t g = genus_x1(N), half = (N - 1) / 2;
    const int64_t m = 1000003;
    EXPECT_EQ(space(N, Curve::X1, RelativeTo::None, Sign::None, m).rank(), static_cast<std::size_t>(2 * g)) << N;
    EXPECT_EQ(space(N, Curve::X1, RelativeTo::CInfinity, Sign::None, m).rank(),
              static_cast<std::size_t>(2 * g + half - 1))
        << N;
    EXPECT_EQ(space(N, Curve::X1, RelativeTo::CInfinity, Sign::Plus, m).rank(), static_cast<std::size_t>(g + half - 1))
        << N;
    EXPECT_EQ(space(N, Curve::X1, RelativeTo::AllCusps, Sign::None, m).rank(),
              static_cast<std::size_t>(2 * g + (N - 1) - 1))
        << N;
  }
}

TEST(X1Spaces, CuspClassification) {
  const auto cusps = cusp_classes(Curve::X1, 11);
  EXPECT_EQ(cusps.size(), 10u);
  std::size_t over_zero = 0;
  for (const CuspClass& c : cusps) over_zero += c.over_zero;
  EXPECT_EQ(over_zero, 5u);
  EXPECT_EQ(cusp_classes(Curve::X0, 11).size(), 2u);
}

TEST(SymbolSpaceErrors, AbsoluteHasNoBoundary) {
  const SymbolSpace S = space(11, Curve::X0, RelativeTo::None, Sign::None);
  EXPECT_EISEN_ERROR(S.boundary(path_chain(Curve::X0, 11, 1, 0)), ErrorCode::NotRelativeSpace);
  const SymbolSpace T = space(23, Curve::X0, RelativeTo::AllCusps, Sign::None);
  EXPECT_EISEN_ERROR(SymbolSpace::from_data(S.context(), T.data()), ErrorCode::LevelMismatch);
}

TEST(SymbolSpaceIds, Format) {
  EXPECT_EQ(space(11, Curve::X0, RelativeTo::None, Sign::Plus).id(), "X0(11)/rel=none/sign=plus");
  EXPECT_EQ(space(11, Curve::X1, RelativeTo::CInfinity, Sign::None, 1000003).id(),
            "X1(11)/rel=cinf/sign=none/mod=1000003");
}
