#include "eisen/modsym/cusp.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"

#include <sstream>

namespace eisen {

namespace {

int64_t sign_label(int64_t x, int64_t N) {
  x = mod(x, N);
  return std::min(x, N - x);
}

CuspClass over_zero_class(Curve curve, int64_t N, int64_t c) {
  if (curve == Curve::X0) return {0, 1, 0, true};
  int64_t l = sign_label(c, N);
  return {1, l, l, true};
}

CuspClass over_infinity_class(Curve curve, int64_t N, int64_t a) {
  if (curve == Curve::X0) return {1, 0, 0, false};
  int64_t l = sign_label(a, N);
  return {l, N, l, false};
}

}  // namespace

std::string CuspClass::to_string() const {
  std::ostringstream os;
  os << (over_zero ? "0" : "oo") << "[" << label << "]=" << a << "/" << c;
  return os.str();
}

CuspClass classify_cusp(Curve curve, int64_t N, int64_t a, int64_t c) {
  if (c < 0) {
    a = -a;
    c = -c;
  }
  int64_t g = gcd(a, c);
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "modsym", "0/0 is not a cusp");
  a /= g;
  c /= g;
  if (mod(c, N) != 0) return over_zero_class(curve, N, c);
  return over_infinity_class(curve, N, a);
}

std::vector<CuspClass> cusp_classes(Curve curve, int64_t N) {
  if (curve == Curve::X0) return {over_zero_class(curve, N, 1), over_infinity_class(curve, N, 1)};
  std::vector<CuspClass> out;
  const int64_t h = (N - 1) / 2;
  for (int64_t l = 1; l <= h; ++l) out.push_back(over_zero_class(curve, N, l));
  for (int64_t l = 1; l <= h; ++l) out.push_back(over_infinity_class(curve, N, l));
  return out;
}

std::size_t cusp_index(Curve curve, int64_t N, const CuspClass& cusp) {
  if (curve == Curve::X0) return cusp.over_zero ? 0 : 1;
  const int64_t h = (N - 1) / 2;
  return static_cast<std::size_t>(cusp.over_zero ? cusp.label - 1 : h + cusp.label - 1);
}

void add_to_divisor(CuspDivisor& d, const CuspClass& c, int64_t coef) {
  if (coef == 0) return;
  auto it = d.find(c);
  if (it == d.end()) {
    d.emplace(c, coef);
    return;
  }
  it->second += coef;
  if (it->second == 0) d.erase(it);
}

int64_t divisor_degree(const CuspDivisor& d) {
  int64_t s = 0;
  for (const auto& [c, k] : d) s += k;
  return s;
}

bool divisor_is_zero(const CuspDivisor& d) {
  for (const auto& [c, k] : d)
    if (k != 0) return false;
  return true;
}

std::string divisor_to_string(const CuspDivisor& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, k] : d) {
    if (k == 0) continue;
    os << (first ? "" : " + ") << k << "*(" << c.to_string() << ")";
    first = false;
  }
  return first ? "0" : os.str();
}

SymbolBoundary symbol_boundary(Curve curve, int64_t N, int64_t c, int64_t d) {
  c = mod(c, N);
  d = mod(d, N);
  SymbolBoundary out;
  // For g = (a b; c d) in SL2(Z): a = d^{-1} when N | c, b = -c^{-1} when N | d.
  out.end = c != 0 ? over_zero_class(curve, N, c) : over_infinity_class(curve, N, curve == Curve::X1 ? inv_mod(d, N) : 1);
  out.start = d != 0 ? over_zero_class(curve, N, d) : over_infinity_class(curve, N, curve == Curve::X1 ? inv_mod(c, N) : 1);
  return out;
}

}  // namespace eisen
