#pragma once

#include "eisen/arith/int_matrix.hpp"

#include <vector>

namespace eisen {

// A Z-submodule of n x n integer matrices, stored as Hermite basis rows of
// the flattened entries.
class MatrixModule {
 public:
  MatrixModule() = default;
  MatrixModule(std::size_t n, const std::vector<IntMatrix>& spanning);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  IntMatrix element(std::size_t i) const;
  std::vector<IntMatrix> elements() const;
  bool contains(const IntMatrix& x) const;

 private:
  std::size_t n_ = 0;
  IntMatrix basis_;
};

// Unital ring generated by the given commuting matrices.
MatrixModule generated_ring(std::size_t n, const std::vector<IntMatrix>& generators);
// Ideal of `ring` generated by the given elements.
MatrixModule ideal_in(const MatrixModule& ring, const std::vector<IntMatrix>& generators);
MatrixModule product(const MatrixModule& a, const MatrixModule& b);
// Span of x * v over x in the module and v in the rows of `vectors`.
IntMatrix apply_module(const MatrixModule& a, const IntMatrix& vectors);

IntMatrix pow_mod_matrix(const IntMatrix& x, const BigInt& e);

}  // namespace eisen
