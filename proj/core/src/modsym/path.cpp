#include "eisen/modsym/path.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/number_theory.hpp"

namespace eisen {

SL2Lift lift_to_sl2(int64_t N, int64_t u, int64_t v) {
  int64_t c = mod(u, N), d = mod(v, N);
  if (c == 0 && d == 0) throw Error(ErrorCode::InvalidArgument, "modsym", "cannot lift (0,0)");
  if (c == 0) {
    if (d != 1) c = N;
  } else {
    while (gcd(c, d) != 1) d += N;
  }
  int64_t x, y;
  xgcd(c, d, x, y);  // c*x + d*y = 1
  return {y, -x, c, d};
}

std::vector<std::pair<int64_t, int64_t>> convergents(int64_t a, int64_t b) {
  std::vector<std::pair<int64_t, int64_t>> out;
  int64_t p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  while (b != 0) {
    int64_t qt = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --qt;
    int64_t r = a - qt * b;
    int64_t p = qt * p_prev + p_prev2, q = qt * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    a = b;
    b = r;
  }
  return out;
}

Chain path_chain(Curve curve, int64_t N, int64_t a, int64_t b) {
  Chain out(N, curve);
  if (b == 0) {
    out.add_symbol(0, 1, 1);
    return out;
  }
  if (b < 0) {
    a = -a;
    b = -b;
  }
  int64_t g = gcd(a, b);
  a /= g;
  b /= g;
  if (a == 0) return out;
  std::vector<std::pair<int64_t, int64_t>> pts = {{0, 1}, {1, 0}};
  for (const auto& pq : convergents(a, b)) pts.push_back(pq);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    auto [p1, q1] = pts[k - 1];
    auto [p2, q2] = pts[k];
    int64_t det = p2 * q1 - p1 * q2;
    // g = (p2 p1; q2 q1) or (-p2 p1; -q2 q1) has determinant 1 and g{0,oo} = {p1/q1, p2/q2}.
    if (det == 1) {
      out.add_symbol(q2, q1, 1);
    } else if (det == -1) {
      out.add_symbol(-q2, q1, 1);
    } else {
      throw Error(ErrorCode::InvalidArgument, "modsym", "convergent determinant not +-1");
    }
  }
  return out.normalize();
}

Chain path_symbol(Curve curve, int64_t N, int64_t a, int64_t b) {
  if (gcd(b, N) != 1) {
    throw Error(ErrorCode::DenominatorSharesFactor, "modsym",
                "denominator " + std::to_string(b) + " shares a factor with N=" + std::to_string(N));
  }
  return path_chain(curve, N, a, b);
}

Chain adjusted_symbol_chain(Curve curve, int64_t N, int64_t u, int64_t v) {
  SL2Lift g = lift_to_sl2(N, u, v);
  Chain out = path_chain(curve, N, -g.c, N * g.a);
  out.add_chain(path_chain(curve, N, -g.d, N * g.b), -1);
  return out.normalize();
}

}  // namespace eisen
