#pragma once

#include "eisen/arith/int_matrix.hpp"

#include <optional>
#include <vector>

namespace eisen {

// Row Hermite form over Z: U*M = H, U unimodular, pivots positive, entries
// above a pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

HermiteForm hermite_form(const IntMatrix& M, bool with_transform = true);

// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
IntMatrix row_basis(const IntMatrix& M);

// Smith form U*M*V = D over Z or over Z/m. Diagonal entries divide each other
// in order; over Z/m they are normalized to divisors of m.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> diagonal;  // length min(rows, cols), zeros at the end
  std::size_t rank = 0;
};

SmithForm smith_form(const IntMatrix& M);

// Howell form of the row span over Z/m (Storjohann). Zero rows removed.
IntMatrix howell_form(const IntMatrix& M);

// Rows x with x*M = 0. Over Z a basis; over Z/m a Howell-form generating set.
IntMatrix left_kernel(const IntMatrix& M);
// Columns K with M*K = 0.
IntMatrix right_kernel(const IntMatrix& M);

// x with x*A = b (integral over Z), or nullopt if none exists.
std::optional<IntVector> solve_left(const IntMatrix& A, const IntVector& b);

// Aggregate view used by reports and tests.
struct NormalForm {
  IntMatrix echelon;   // Hermite form over Z, Howell form over Z/m
  SmithForm smith;
  IntMatrix kernel;    // columns, M * kernel = 0
  IntMatrix image;     // columns spanning the column space
  std::vector<BigInt> invariant_factors;  // nonunit cokernel factors (0 = free)
};

NormalForm normal_form(const IntMatrix& M);

}  // namespace eisen
