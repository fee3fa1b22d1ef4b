#include "eisen/arith/finite_quotient.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/normal_form.hpp"

namespace eisen {

namespace {
const char* kModule = "core-arith";
}

LatticeQuotient::LatticeQuotient(const IntMatrix& a_generators, const IntMatrix& b_generators) {
  HermiteForm hf = hermite_form(a_generators, false);
  a_basis_ = hf.H.submatrix(0, hf.rank, 0, a_generators.cols());
  a_pivots_ = hf.pivot_cols;
  const std::size_t r = a_basis_.rows();
  IntMatrix bc(0, r);
  for (std::size_t i = 0; i < b_generators.rows(); ++i) bc.append_row(a_coordinates(b_generators.row(i)));
  if (bc.rows() == 0) bc = IntMatrix(1, r);
  SmithForm sf = smith_form(bc);
  v_ = sf.V;
  diag_.assign(r, 0);
  for (std::size_t i = 0; i < sf.rank; ++i) diag_[i] = sf.diagonal[i];
}

IntVector LatticeQuotient::a_coordinates(const IntVector& x) const {
  IntVector rem = x;
  IntVector coords(a_basis_.rows());
  for (std::size_t i = 0; i < a_basis_.rows(); ++i) {
    std::size_t c = a_pivots_[i];
    const BigInt& piv = a_basis_(i, c);
    if (rem[c] % piv != 0) throw Error(ErrorCode::InvalidArgument, kModule, "vector not in lattice A");
    BigInt k = rem[c] / piv;
    coords[i] = k;
    if (k != 0)
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= k * a_basis_(i, j);
  }
  for (const BigInt& e : rem)
    if (e != 0) throw Error(ErrorCode::InvalidArgument, kModule, "vector not in lattice A");
  return coords;
}

std::vector<BigInt> LatticeQuotient::invariant_factors() const {
  std::vector<BigInt> out;
  for (const BigInt& d : diag_)
    if (d != 1) out.push_back(d);
  return out;
}

bool LatticeQuotient::has_free_part() const {
  for (const BigInt& d : diag_)
    if (d == 0) return true;
  return false;
}

namespace {
BigInt p_part(BigInt d, int64_t p) {
  BigInt out = 1;
  if (d == 0) return 0;
  while (d % p == 0) {
    d /= p;
    out *= p;
  }
  return out;
}
}  // namespace

std::vector<BigInt> LatticeQuotient::p_invariants(int64_t p) const {
  std::vector<BigInt> out;
  for (const BigInt& d : diag_) {
    if (d == 0) continue;
    BigInt pp = p_part(d, p);
    if (pp > 1) out.push_back(pp);
  }
  return out;
}

BigInt LatticeQuotient::p_order(int64_t p) const {
  BigInt out = 1;
  for (const BigInt& d : p_invariants(p)) out *= d;
  return out;
}

IntVector LatticeQuotient::p_coordinates(const IntVector& x, int64_t p) const {
  IntVector a = a_coordinates(x);
  IntVector y = v_.left_apply(a);
  IntVector out;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] == 0) continue;
    BigInt pp = p_part(diag_[i], p);
    if (pp > 1) out.push_back(mod_floor(y[i], pp));
  }
  return out;
}

bool LatticeQuotient::p_trivial(const IntVector& x, int64_t p) const {
  IntVector y = v_.left_apply(a_coordinates(x));
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] == 0) {
      if (y[i] != 0) return false;
      continue;
    }
    BigInt pp = p_part(diag_[i], p);
    if (pp > 1 && mod_floor(y[i], pp) != 0) return false;
  }
  return true;
}

}  // namespace eisen
