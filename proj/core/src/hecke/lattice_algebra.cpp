#include "eisen/hecke/lattice_algebra.hpp"

#include "eisen/arith/errors.hpp"
#include "eisen/arith/normal_form.hpp"

namespace eisen {

namespace {

IntMatrix flat_rows(std::size_t n, const std::vector<IntMatrix>& ms) {
  IntMatrix rows(0, n * n);
  for (const IntMatrix& m : ms) {
    if (m.rows() != n || m.cols() != n || m.is_modular())
      throw Error(ErrorCode::InvalidArgument, "hecke", "matrix module needs exact n x n matrices");
    rows.append_row(m.flatten());
  }
  return rows;
}

}  // namespace

MatrixModule::MatrixModule(std::size_t n, const std::vector<IntMatrix>& spanning)
    : n_(n), basis_(row_basis(flat_rows(n, spanning))) {}

IntMatrix MatrixModule::element(std::size_t i) const { return IntMatrix::unflatten(basis_.row(i), n_, n_); }

std::vector<IntMatrix> MatrixModule::elements() const {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(element(i));
  return out;
}

bool MatrixModule::contains(const IntMatrix& x) const {
  IntMatrix stacked = IntMatrix::vstack(basis_, flat_rows(n_, {x}));
  return row_basis(stacked) == basis_;
}

MatrixModule generated_ring(std::size_t n, const std::vector<IntMatrix>& generators) {
  std::vector<IntMatrix> span = {IntMatrix::identity(n)};
  span.insert(span.end(), generators.begin(), generators.end());
  MatrixModule ring(n, span);
  while (true) {
    std::vector<IntMatrix> next = ring.elements();
    for (const IntMatrix& b : ring.elements())
      for (const IntMatrix& g : generators) next.push_back(b * g);
    MatrixModule grown(n, next);
    if (grown.basis() == ring.basis()) return ring;
    ring = std::move(grown);
  }
}

MatrixModule ideal_in(const MatrixModule& ring, const std::vector<IntMatrix>& generators) {
  std::vector<IntMatrix> span;
  for (const IntMatrix& b : ring.elements())
    for (const IntMatrix& g : generators) span.push_back(b * g);
  return MatrixModule(ring.size(), span);
}

MatrixModule product(const MatrixModule& a, const MatrixModule& b) {
  std::vector<IntMatrix> span;
  for (const IntMatrix& x : a.elements())
    for (const IntMatrix& y : b.elements()) span.push_back(x * y);
  return MatrixModule(a.size(), span);
}

IntMatrix apply_module(const MatrixModule& a, const IntMatrix& vectors) {
  IntMatrix rows(0, a.size());
  for (const IntMatrix& x : a.elements())
    for (std::size_t i = 0; i < vectors.rows(); ++i) rows.append_row(x.left_apply(vectors.row(i)));
  return row_basis(rows);
}

IntMatrix pow_mod_matrix(const IntMatrix& x, const BigInt& e) {
  IntMatrix result = IntMatrix::identity(x.rows(), x.modulus());
  IntMatrix base = x;
  BigInt k = e;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace eisen
