#include "eisen/arith/int_matrix.hpp"

#include "eisen/arith/errors.hpp"

#include <sstream>
#include <utility>

namespace eisen {

namespace {
const char* kModule = "core-arith";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const BigInt& modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols) {
  if (modulus <= 0) throw Error(ErrorCode::InvalidArgument, kModule, "modulus must be positive");
}

IntMatrix IntMatrix::identity(std::size_t n, std::optional<BigInt> modulus) {
  IntMatrix m = modulus ? IntMatrix(n, n, *modulus) : IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols,
                               std::optional<BigInt> modulus) {
  IntMatrix m = modulus ? IntMatrix(rows.size(), cols, *modulus) : IntMatrix(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

BigInt IntMatrix::normalize(const BigInt& x) const { return modulus_ ? mod_floor(x, *modulus_) : x; }

void IntMatrix::require_same_modulus(const IntMatrix& other) const {
  if (modulus_ != other.modulus_) throw Error(ErrorCode::ModulusMismatch, kModule, "operands use different moduli");
}

void IntMatrix::set(std::size_t i, std::size_t j, const BigInt& value) { data_[i * cols_ + j] = normalize(value); }

void IntMatrix::add_to(std::size_t i, std::size_t j, const BigInt& value) {
  BigInt& e = data_[i * cols_ + j];
  e = normalize(e + value);
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::set_row(std::size_t i, const IntVector& values) {
  if (values.size() != cols_) throw Error(ErrorCode::InvalidArgument, kModule, "row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) set(i, j, values[j]);
}

void IntMatrix::append_row(const IntVector& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(ErrorCode::InvalidArgument, kModule, "row length mismatch");
  for (const BigInt& x : values) data_.push_back(normalize(x));
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const BigInt& s = data_[src * cols_ + j];
    if (s != 0) data_[dst * cols_ + j] = normalize(data_[dst * cols_ + j] + k * s);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const BigInt& s = data_[i * cols_ + src];
    if (s != 0) data_[i * cols_ + dst] = normalize(data_[i * cols_ + dst] + k * s);
  }
}

void IntMatrix::scale_row(std::size_t i, const BigInt& k) {
  for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = normalize(data_[i * cols_ + j] * k);
}

void IntMatrix::scale_col(std::size_t j, const BigInt& k) {
  for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + j] = normalize(data_[i * cols_ + j] * k);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t = modulus_ ? IntMatrix(cols_, rows_, *modulus_) : IntMatrix(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  require_same_modulus(other);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::InvalidArgument, kModule, "shape mismatch");
  IntMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = normalize(data_[k] + other.data_[k]);
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  require_same_modulus(other);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::InvalidArgument, kModule, "shape mismatch");
  IntMatrix r = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = normalize(data_[k] - other.data_[k]);
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  require_same_modulus(other);
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidArgument, kModule, "shape mismatch in product");
  IntMatrix r = modulus_ ? IntMatrix(rows_, other.cols_, *modulus_) : IntMatrix(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const BigInt& b = other.data_[k * other.cols_ + j];
        if (b != 0) r.data_[i * other.cols_ + j] += a * b;
      }
    }
  }
  if (modulus_)
    for (BigInt& x : r.data_) x = mod_floor(x, *modulus_);
  return r;
}

IntMatrix IntMatrix::scaled(const BigInt& k) const {
  IntMatrix r = *this;
  for (BigInt& x : r.data_) x = normalize(x * k);
  return r;
}

IntVector IntMatrix::left_apply(const IntVector& v) const {
  if (v.size() != rows_) throw Error(ErrorCode::InvalidArgument, kModule, "vector length mismatch");
  IntVector out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigInt& b = data_[i * cols_ + j];
      if (b != 0) out[j] += v[i] * b;
    }
  }
  if (modulus_)
    for (BigInt& x : out) x = mod_floor(x, *modulus_);
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && modulus_ == other.modulus_ && data_ == other.data_;
}

bool IntMatrix::is_zero() const {
  for (const BigInt& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::reduced_mod(const BigInt& modulus) const {
  IntMatrix r(rows_, cols_, modulus);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = mod_floor(data_[k], modulus);
  return r;
}

IntMatrix IntMatrix::lifted() const {
  IntMatrix r(rows_, cols_);
  r.data_ = data_;
  return r;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  IntMatrix r = modulus_ ? IntMatrix(nr, nc, *modulus_) : IntMatrix(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
  return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  a.require_same_modulus(b);
  if (a.rows_ != b.rows_) throw Error(ErrorCode::InvalidArgument, kModule, "hstack row mismatch");
  IntMatrix r = a.modulus_ ? IntMatrix(a.rows_, a.cols_ + b.cols_, *a.modulus_) : IntMatrix(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r.data_[i * r.cols_ + j] = a.data_[i * a.cols_ + j];
    for (std::size_t j = 0; j < b.cols_; ++j) r.data_[i * r.cols_ + a.cols_ + j] = b.data_[i * b.cols_ + j];
  }
  return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  a.require_same_modulus(b);
  if (a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, kModule, "vstack column mismatch");
  IntMatrix r = a;
  r.data_.insert(r.data_.end(), b.data_.begin(), b.data_.end());
  r.rows_ += b.rows_;
  return r;
}

IntMatrix IntMatrix::unflatten(const IntVector& v, std::size_t rows, std::size_t cols,
                               std::optional<BigInt> modulus) {
  if (v.size() != rows * cols) throw Error(ErrorCode::InvalidArgument, kModule, "unflatten size mismatch");
  IntMatrix m = modulus ? IntMatrix(rows, cols, *modulus) : IntMatrix(rows, cols);
  for (std::size_t k = 0; k < v.size(); ++k) m.data_[k] = m.normalize(v[k]);
  return m;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, kModule, "determinant of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination over Z.
  std::vector<BigInt> a = data_;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  BigInt det = sign * a[n * n - 1];
  return normalize(det);
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += data_[i * cols_ + i];
  return normalize(t);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << data_[i * cols_ + j];
  }
  os << "]";
  if (modulus_) os << " mod " << *modulus_;
  return os.str();
}

}  // namespace eisen
