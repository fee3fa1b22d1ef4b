#pragma once

#include "eisen/arith/int_matrix.hpp"

#include <vector>

namespace eisen {

// The quotient A/B of two lattices in Z^k, B inside A, each given by
// generating rows. Elements of A are mapped to Smith coordinates; the
// p-primary part is read off by reducing each coordinate mod p^{e_i}.
class LatticeQuotient {
 public:
  LatticeQuotient(const IntMatrix& a_generators, const IntMatrix& b_generators);

  std::size_t rank_a() const { return a_basis_.rows(); }
  // Invariant factors d_i != 1 (0 marks a free summand).
  std::vector<BigInt> invariant_factors() const;
  // p-primary invariants p^{e_i}, e_i > 0, in order.
  std::vector<BigInt> p_invariants(int64_t p) const;
  BigInt p_order(int64_t p) const;
  bool p_cyclic(int64_t p) const { return p_invariants(p).size() <= 1; }
  bool has_free_part() const;

  // Coordinates of x in A (throws InvalidArgument if x is not in A).
  IntVector a_coordinates(const IntVector& x) const;
  // p-primary coordinates of the class of x, one per p-invariant.
  IntVector p_coordinates(const IntVector& x, int64_t p) const;
  bool p_trivial(const IntVector& x, int64_t p) const;

 private:
  IntMatrix a_basis_;
  std::vector<std::size_t> a_pivots_;
  IntMatrix v_;                  // Smith column transform
  std::vector<BigInt> diag_;     // length rank_a, 0 for free coordinates
};

}  // namespace eisen
