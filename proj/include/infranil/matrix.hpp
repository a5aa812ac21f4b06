#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <infranil/errors.hpp>
#include <infranil/rational.hpp>

namespace infranil {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

  bool is_zero() const {
    for (const T& v : data_)
      if (v != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
  }

  Matrix operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
  }

  Matrix operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
  }

  /// M^e for square M, e >= 0 (e = 0 gives the identity).
  Matrix pow(unsigned long e) const {
    if (!square()) throw DimensionError("matrix power needs a square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1UL) result = result * base;
      base = base * base;
      e >>= 1UL;
    }
    return result;
  }

  std::vector<T> operator*(const std::vector<T>& x) const {
    if (cols_ != x.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

/// Exact determinant by fraction-free (Bareiss) elimination. Over Integer
/// every interior division is exact; over Rational it keeps entries from
/// compounding into deep fractions.
template <class T>
T det(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  Matrix<T> w = m;
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && w(pivot, k) == 0) ++pivot;
      if (pivot == n) return T(0);
      w.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  T result = w(n - 1, n - 1);
  return sign < 0 ? T(-result) : result;
}

inline std::optional<RatMatrix> try_inverse(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("inverse needs a square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      a.swap_rows(col, pivot);
      inv.swap_rows(col, pivot);
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

inline RatMatrix inverse(const RatMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw DimensionError("matrix is singular");
  return *inv;
}

inline bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) return false;
  return true;
}

inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) throw std::domain_error("matrix entry is not an integer");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

enum class SolveKind { unique, underdetermined, inconsistent };

struct LinearSolution {
  SolveKind kind = SolveKind::inconsistent;
  std::vector<Rational> x;  // a particular solution (free variables set to 0)
};

/// Solves A x = b exactly by row reduction.
inline LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& b) {
  if (a.rows() != b.size()) throw DimensionError("linear system shape mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  RatMatrix w(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) w(i, j) = a(i, j);
    w(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && w(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != row) w.swap_rows(p, row);
    const Rational pv = w(row, col);
    for (std::size_t j = col; j <= cols; ++j) w(row, j) /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || w(i, col) == 0) continue;
      const Rational f = w(i, col);
      for (std::size_t j = col; j <= cols; ++j) w(i, j) -= f * w(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (w(i, cols) != 0) return {SolveKind::inconsistent, {}};
  LinearSolution out;
  out.kind = pivot_col.size() == cols ? SolveKind::unique : SolveKind::underdetermined;
  out.x.assign(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out.x[pivot_col[r]] = w(r, cols);
  return out;
}

}  // namespace infranil
