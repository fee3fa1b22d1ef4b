#include "eisen/modsym/manin_symbol.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"
#include "eisen/modsym/chain.hpp"

#include <algorithm>

namespace eisen {

namespace {
const char* kModule = "modsym";
}

const char* curve_name(Curve c) { return c == Curve::X0 ? "X0" : "X1"; }

std::string ManinSymbol::to_string() const {
  std::string s = kind == Curve::X0 ? "(" + std::to_string(u) + ":" + std::to_string(v) + ")"
                                    : "[" + std::to_string(u) + "," + std::to_string(v) + "]";
  return adjusted ? s + "'" : s;
}

ManinSymbol gamma0_symbol(int64_t N, int64_t c, int64_t d) {
  c = mod(c, N);
  d = mod(d, N);
  if (c == 0 && d == 0) throw Error(ErrorCode::InvalidArgument, kModule, "(0:0) is not in P^1");
  if (c == 0) return {Curve::X0, 0, 1, false};
  return {Curve::X0, 1, mul_mod(d, inv_mod(c, N), N), false};
}

ManinSymbol gamma1_symbol(int64_t N, int64_t u, int64_t v) {
  u = mod(u, N);
  v = mod(v, N);
  if (u == 0 && v == 0) throw Error(ErrorCode::InvalidArgument, kModule, "[0,0] is not a Gamma1 symbol");
  int64_t nu = mod(-u, N), nv = mod(-v, N);
  if (std::make_pair(nu, nv) < std::make_pair(u, v)) return {Curve::X1, nu, nv, false};
  return {Curve::X1, u, v, false};
}

ManinSymbol make_symbol(Curve curve, int64_t N, int64_t u, int64_t v) {
  return curve == Curve::X0 ? gamma0_symbol(N, u, v) : gamma1_symbol(N, u, v);
}

std::size_t symbol_count(Curve curve, int64_t N) {
  return curve == Curve::X0 ? static_cast<std::size_t>(N + 1) : static_cast<std::size_t>((N * N - 1) / 2);
}

std::size_t symbol_index(Curve curve, int64_t N, int64_t u, int64_t v) {
  ManinSymbol s = make_symbol(curve, N, u, v);
  if (curve == Curve::X0) return s.u == 0 ? 0 : static_cast<std::size_t>(1 + s.v);
  const int64_t h = (N - 1) / 2;
  if (s.u == 0) return static_cast<std::size_t>(s.v - 1);
  return static_cast<std::size_t>(h + (s.u - 1) * N + s.v);
}

ManinSymbol symbol_at(Curve curve, int64_t N, std::size_t index) {
  const auto i = static_cast<int64_t>(index);
  if (curve == Curve::X0) return i == 0 ? ManinSymbol{Curve::X0, 0, 1, false} : ManinSymbol{Curve::X0, 1, i - 1, false};
  const int64_t h = (N - 1) / 2;
  if (i < h) return {Curve::X1, 0, i + 1, false};
  const int64_t r = i - h;
  return {Curve::X1, 1 + r / N, r % N, false};
}

std::vector<ManinSymbol> manin_generators(Curve curve, int64_t N) {
  std::vector<ManinSymbol> out;
  const std::size_t n = symbol_count(curve, N);
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(symbol_at(curve, N, i));
  return out;
}

void Chain::add_symbol(int64_t u, int64_t v, int64_t coef) {
  if (coef != 0) terms.emplace_back(symbol_index(curve, N, u, v), coef);
}

void Chain::add_chain(const Chain& other, int64_t coef) {
  if (other.N != N || other.curve != curve) {
    throw Error(ErrorCode::LevelMismatch, kModule, "adding chains on different curves or levels");
  }
  if (coef == 0) return;
  for (const auto& [i, c] : other.terms) terms.emplace_back(i, c * coef);
}

Chain& Chain::normalize() {
  std::sort(terms.begin(), terms.end());
  std::vector<std::pair<std::size_t, int64_t>> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(t);
    }
  }
  terms.clear();
  for (const auto& t : out)
    if (t.second != 0) terms.push_back(t);
  return *this;
}

Chain Chain::normalized() const {
  Chain c = *this;
  c.normalize();
  return c;
}

bool Chain::is_zero() const { return normalized().terms.empty(); }

Chain Chain::scaled(int64_t k) const {
  Chain c(N, curve);
  c.add_chain(*this, k);
  return c;
}

Chain operator+(const Chain& a, const Chain& b) {
  Chain c = a;
  c.add_chain(b, 1);
  return c.normalize();
}

Chain operator-(const Chain& a, const Chain& b) {
  Chain c = a;
  c.add_chain(b, -1);
  return c.normalize();
}

bool operator==(const Chain& a, const Chain& b) {
  return a.N == b.N && a.curve == b.curve && a.normalized().terms == b.normalized().terms;
}

}  // namespace eisen
