#pragma once

// Dense exact matrices over Rational and the elimination routines built on
// them (rank, null space, inverse). No floating point is used anywhere.

#include "heisrep/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heisrep {

using Vector = std::vector<Rational>;

/// Thrown on non-conformable operands.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw ShapeError("RatMatrix: entry count " + std::to_string(entries_.size()) + " != " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  /// Row-list literal; all rows must have equal length.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("RatMatrix: ragged row list");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static RatMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Elementary matrix with a single 1 at (row, col), 0-based.
  static RatMatrix unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col) {
    RatMatrix m(rows, cols);
    m(row, col) = 1;
    return m;
  }

  static RatMatrix from_rows(std::span<const Vector> rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("RatMatrix::from_rows: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  [[nodiscard]] Vector row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  [[nodiscard]] Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline RatMatrix mat_add(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("mat_add: shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!b(i, j).is_zero()) c(i, j) += b(i, j);
  return c;
}

inline RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("mat_sub: shape mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!b(i, j).is_zero()) c(i, j) -= b(i, j);
  return c;
}

inline RatMatrix mat_scale(const RatMatrix& a, const Rational& s) {
  if (s.is_zero()) return RatMatrix(a.rows(), a.cols());
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!c(i, j).is_zero()) c(i, j) *= s;
  return c;
}

/// c += s * a, in place.
inline void mat_axpy(RatMatrix& c, const Rational& s, const RatMatrix& a) {
  if (c.rows() != a.rows() || c.cols() != a.cols()) throw ShapeError("mat_axpy: shape mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) c(i, j) += s * a(i, j);
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  RatMatrix c(a.rows(), b.cols());
  // Zero entries of a are skipped; representation matrices are very sparse.
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) c(i, j) += aik * bkj;
      }
    }
  return c;
}

inline Vector mat_vec(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw ShapeError("mat_vec: dimension mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

/// AB - BA.
inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("commutator: operands must be square of equal size");
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline RowEchelon rref(RatMatrix a) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
    const Rational inv = a(lead_row, col).reciprocal();
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(lead_row, j).is_zero()) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(lead_row, j).is_zero()) a(r, j) -= factor * a(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }

/// Basis of {v : A v = 0}. One vector per free column of the reduced echelon
/// form, in increasing column order, with a 1 in that free position.
inline std::vector<Vector> kernel_basis(const RatMatrix& a) {
  const RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (!e.reduced(i, f).is_zero()) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Throws std::domain_error if a is singular.
inline RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw ShapeError("inverse: matrix must be square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// True iff A^d = 0 for a d x d matrix A.
inline bool is_nilpotent_matrix(const RatMatrix& a) {
  if (!a.is_square()) throw ShapeError("is_nilpotent_matrix: matrix must be square");
  RatMatrix power = a;
  for (std::size_t k = 1; k < a.rows(); ++k) {
    if (power.is_zero()) return true;
    power = mat_mul(power, a);
  }
  return power.is_zero();
}

inline bool is_strictly_upper_triangular(const RatMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j <= i && j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

/// Flattens row-major into a coordinate vector.
inline Vector vectorize(const RatMatrix& a) { return a.entries(); }

}  // namespace heisrep
