#pragma once

#include "eisen/arith/bigint.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eisen {

using IntVector = std::vector<BigInt>;

// Dense matrix over Z, or over Z/m when constructed with a modulus. The
// modulus never changes after construction; mixing moduli throws
// ModulusMismatch. Modular entries are kept in [0, m).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, const BigInt& modulus);

  static IntMatrix identity(std::size_t n, std::optional<BigInt> modulus = std::nullopt);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols,
                             std::optional<BigInt> modulus = std::nullopt);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::optional<BigInt>& modulus() const { return modulus_; }
  bool is_modular() const { return modulus_.has_value(); }

  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const BigInt& value);
  void add_to(std::size_t i, std::size_t j, const BigInt& value);

  IntVector row(std::size_t i) const;
  void set_row(std::size_t i, const IntVector& values);
  void append_row(const IntVector& values);

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void scale_row(std::size_t i, const BigInt& k);
  void scale_col(std::size_t j, const BigInt& k);

  IntMatrix transpose() const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix scaled(const BigInt& k) const;
  IntVector left_apply(const IntVector& v) const;  // v * M
  bool operator==(const IntMatrix& other) const;
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }
  bool is_zero() const;

  IntMatrix reduced_mod(const BigInt& modulus) const;
  IntMatrix lifted() const;
  IntMatrix submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

  // Flattened row-major entries.
  IntVector flatten() const { return data_; }
  static IntMatrix unflatten(const IntVector& v, std::size_t rows, std::size_t cols,
                             std::optional<BigInt> modulus = std::nullopt);

  BigInt determinant() const;
  BigInt trace() const;
  std::string to_string() const;

 private:
  BigInt normalize(const BigInt& x) const;
  void require_same_modulus(const IntMatrix& other) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::optional<BigInt> modulus_;
  IntVector data_;
};

}  // namespace eisen
