#include "eisen/arith/normal_form.hpp"

#include "eisen/arith/errors.hpp"

#include <utility>

namespace eisen {

namespace {

const char* kModule = "core-arith";

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt qt = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) qt -= 1;
  return qt;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Integer g = gcd(a, b) >= 0 with s*a + t*b = g.
BigInt big_xgcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    BigInt qt = old_r / r;
    BigInt tmp = old_r - qt * r;
    old_r = r;
    r = tmp;
    tmp = old_s - qt * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - qt * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt s, t;
  return big_xgcd(a, b, s, t);
}

// A unit w mod m with a*w = gcd(a, m) (mod m).
BigInt normalizing_unit(const BigInt& a, const BigInt& m) {
  BigInt g = big_gcd(a, m);
  if (g == 0) return 1;
  BigInt a1 = a / g, m1 = m / g;
  BigInt w0 = 1;
  if (m1 > 1) {
    BigInt s, t;
    big_xgcd(mod_floor(a1, m1), m1, s, t);
    w0 = mod_floor(s, m1);
  }
  BigInt w = w0;
  while (big_gcd(w, m) != 1) w += m1;
  return w;
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& M, bool with_transform) {
  if (M.is_modular()) throw Error(ErrorCode::ModulusMismatch, kModule, "Hermite form needs an exact matrix");
  HermiteForm out;
  out.H = M;
  std::size_t m = M.rows(), n = M.cols();
  if (with_transform) out.U = IntMatrix::identity(m);
  IntMatrix& H = out.H;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (H(i, j) != 0 && (best == m || abs_big(H(i, j)) < abs_big(H(best, j)))) best = i;
      }
      if (best == m) break;
      H.swap_rows(best, r);
      if (with_transform) out.U.swap_rows(best, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        BigInt qt = H(i, j) / H(r, j);
        H.add_row_multiple(i, r, -qt);
        if (with_transform) out.U.add_row_multiple(i, r, -qt);
        if (H(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(r, j) == 0) continue;
    if (H(r, j) < 0) {
      H.scale_row(r, -1);
      if (with_transform) out.U.scale_row(r, -1);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt qt = floor_div(H(i, j), H(r, j));
      if (qt != 0) {
        H.add_row_multiple(i, r, -qt);
        if (with_transform) out.U.add_row_multiple(i, r, -qt);
      }
    }
    out.pivot_cols.push_back(j);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix row_basis(const IntMatrix& M) {
  HermiteForm hf = hermite_form(M, false);
  return hf.H.submatrix(0, hf.rank, 0, M.cols());
}

SmithForm smith_form(const IntMatrix& M) {
  SmithForm out;
  const std::size_t m = M.rows(), n = M.cols();
  out.D = M;
  out.U = IntMatrix::identity(m, M.modulus());
  out.V = IntMatrix::identity(n, M.modulus());
  IntMatrix& D = out.D;
  const bool modular = M.is_modular();
  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool found = true;
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (bi == m || abs_big(D(i, j)) < abs_big(D(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) {
        found = false;
        break;
      }
      D.swap_rows(t, bi);
      out.U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      out.V.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        BigInt qt = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -qt);
        out.U.add_row_multiple(i, t, -qt);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        BigInt qt = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -qt);
        out.V.add_col_multiple(j, t, -qt);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      if (modular) {
        BigInt w = normalizing_unit(D(t, t), *M.modulus());
        if (w != 1) {
          D.scale_row(t, w);
          out.U.scale_row(t, w);
        }
      } else if (D(t, t) < 0) {
        D.scale_row(t, -1);
        out.U.scale_row(t, -1);
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      D.add_row_multiple(t, bad, 1);
      out.U.add_row_multiple(t, bad, 1);
    }
    if (!found) break;
  }
  out.rank = t;
  out.diagonal.assign(steps, 0);
  for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = D(i, i);
  return out;
}

IntMatrix howell_form(const IntMatrix& M) {
  if (!M.is_modular()) throw Error(ErrorCode::ModulusMismatch, kModule, "Howell form needs a modulus");
  const BigInt& mod = *M.modulus();
  const std::size_t n = M.cols();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(M.row(i));
  if (rows.empty()) rows.push_back(IntVector(n));
  auto combine = [&](IntVector& dst, const IntVector& a, const BigInt& ka, const IntVector& b, const BigInt& kb) {
    for (std::size_t c = 0; c < n; ++c) dst[c] = mod_floor(ka * a[c] + kb * b[c], mod);
  };
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = k + 1; i < rows.size(); ++i) {
      if (rows[i][j] == 0) continue;
      if (rows[k][j] == 0) {
        std::swap(rows[k], rows[i]);
        continue;
      }
      BigInt s, t;
      BigInt g = big_xgcd(rows[k][j], rows[i][j], s, t);
      BigInt u = -(rows[i][j] / g), v = rows[k][j] / g;
      IntVector nk(n), ni(n);
      combine(nk, rows[k], s, rows[i], t);
      combine(ni, rows[k], u, rows[i], v);
      rows[k] = std::move(nk);
      rows[i] = std::move(ni);
    }
    if (k >= rows.size() || rows[k][j] == 0) continue;
    BigInt w = normalizing_unit(rows[k][j], mod);
    if (w != 1)
      for (BigInt& x : rows[k]) x = mod_floor(x * w, mod);
    const BigInt pivot = rows[k][j];
    BigInt ann = mod / pivot;
    if (ann != mod) {
      IntVector extra(n);
      bool nonzero = false;
      for (std::size_t c = 0; c < n; ++c) {
        extra[c] = mod_floor(rows[k][c] * ann, mod);
        if (extra[c] != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(extra));
    }
    for (std::size_t i = 0; i < k; ++i) {
      BigInt qt = rows[i][j] / pivot;
      if (qt != 0)
        for (std::size_t c = 0; c < n; ++c) rows[i][c] = mod_floor(rows[i][c] - qt * rows[k][c], mod);
    }
    ++k;
    if (k == rows.size()) {
      // Keep a slot for later annihilator rows.
      rows.push_back(IntVector(n));
    }
  }
  IntMatrix out(0, n, mod);
  for (std::size_t i = 0; i < k && i < rows.size(); ++i) {
    bool nonzero = false;
    for (const BigInt& x : rows[i]) nonzero = nonzero || x != 0;
    if (nonzero) out.append_row(rows[i]);
  }
  return out;
}

IntMatrix left_kernel(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  if (!M.is_modular()) {
    HermiteForm hf = hermite_form(M, true);
    IntMatrix K(0, m);
    for (std::size_t i = hf.rank; i < m; ++i) K.append_row(hf.U.row(i));
    if (K.rows() == 0) return IntMatrix(0, m);
    return row_basis(K);
  }
  IntMatrix aug = IntMatrix::hstack(M, IntMatrix::identity(m, M.modulus()));
  IntMatrix h = howell_form(aug);
  IntMatrix K(0, m, *M.modulus());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool first_zero = true;
    for (std::size_t j = 0; j < n; ++j) first_zero = first_zero && h(i, j) == 0;
    if (first_zero) {
      IntVector r(m);
      for (std::size_t j = 0; j < m; ++j) r[j] = h(i, n + j);
      K.append_row(r);
    }
  }
  if (K.rows() == 0) return K;
  return howell_form(K);
}

IntMatrix right_kernel(const IntMatrix& M) {
  IntMatrix K = left_kernel(M.transpose());
  return K.transpose();
}

std::optional<IntVector> solve_left(const IntMatrix& A, const IntVector& b) {
  const std::size_t m = A.rows(), n = A.cols();
  if (b.size() != n) throw Error(ErrorCode::InvalidArgument, kModule, "solve_left length mismatch");
  if (!A.is_modular()) {
    HermiteForm hf = hermite_form(A, true);
    IntVector rem = b;
    IntVector x(m);
    for (std::size_t i = 0; i < hf.rank; ++i) {
      std::size_t c = hf.pivot_cols[i];
      if (rem[c] % hf.H(i, c) != 0) return std::nullopt;
      BigInt yi = rem[c] / hf.H(i, c);
      if (yi == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rem[j] -= yi * hf.H(i, j);
      for (std::size_t j = 0; j < m; ++j) x[j] += yi * hf.U(i, j);
    }
    for (const BigInt& r : rem)
      if (r != 0) return std::nullopt;
    return x;
  }
  const BigInt& mod = *A.modulus();
  IntMatrix aug = IntMatrix::hstack(A, IntMatrix::identity(m, A.modulus()));
  IntMatrix h = howell_form(aug);
  IntVector rem(n + m);
  for (std::size_t j = 0; j < n; ++j) rem[j] = mod_floor(b[j], mod);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < n + m && h(i, c) == 0) ++c;
    if (c >= n) break;
    if (rem[c] % h(i, c) != 0) return std::nullopt;
    BigInt qt = rem[c] / h(i, c);
    if (qt == 0) continue;
    for (std::size_t j = 0; j < n + m; ++j) rem[j] = mod_floor(rem[j] - qt * h(i, j), mod);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (rem[j] != 0) return std::nullopt;
  IntVector x(m);
  for (std::size_t j = 0; j < m; ++j) x[j] = mod_floor(-rem[n + j], mod);
  return x;
}

NormalForm normal_form(const IntMatrix& M) {
  NormalForm nf;
  if (M.is_modular()) {
    nf.echelon = howell_form(M);
    IntMatrix img = howell_form(M.transpose());
    nf.image = img.transpose();
  } else {
    HermiteForm hf = hermite_form(M, false);
    nf.echelon = hf.H.submatrix(0, hf.rank, 0, M.cols());
    nf.image = row_basis(M.transpose()).transpose();
  }
  nf.smith = smith_form(M);
  nf.kernel = right_kernel(M);
  for (std::size_t i = 0; i < nf.smith.rank; ++i) nf.invariant_factors.push_back(nf.smith.diagonal[i]);
  return nf;
}

}  // namespace eisen
