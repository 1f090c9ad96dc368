#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gprs/combinations.hpp"
#include "gprs/galois.hpp"

namespace gprs {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Symbol> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw InvalidArgument("matrix entry count does not match its shape");
    for (Symbol e : entries_)
      if (!field_.contains(e)) throw InvalidArgument("matrix entry outside the field");
  }

  static Matrix from_rows(const Field& field, const std::vector<std::vector<Symbol>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Symbol> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw InvalidArgument("ragged matrix rows");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(field, rows.size(), cols, std::move(flat));
  }

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Moment matrix with rows 1, x, ..., x^{n-1} evaluated on the points.
  static Matrix vandermonde(const Field& field, std::span<const Symbol> points) {
    const std::size_t n = points.size();
    Matrix m(field, n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Symbol v = 1;
      for (std::size_t r = 0; r < n; ++r) {
        m(r, c) = v;
        v = field.mul(v, points[c]);
      }
    }
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Symbol operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  FieldElement element(std::size_t r, std::size_t c) const { return field_.element((*this)(r, c)); }

  std::span<const Symbol> row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }

  Matrix select_columns(std::span<const std::size_t> columns) const {
    Matrix m(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < columns.size(); ++c) m(r, c) = (*this)(r, columns[c]);
    return m;
  }

  /// This matrix with one extra row appended at the bottom.
  Matrix with_row(std::span<const Symbol> extra) const {
    if (extra.size() != cols_) throw InvalidArgument("appended row has the wrong length");
    Matrix m(field_, rows_ + 1, cols_);
    std::copy(entries_.begin(), entries_.end(), m.entries_.begin());
    std::copy(extra.begin(), extra.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> entries_;
};

namespace detail {

/// In-place elimination to upper-triangular form; returns the determinant.
inline Symbol eliminate_determinant(const Field& f, std::vector<Symbol>& a, std::size_t n) {
  Symbol det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      det = f.neg(det);
    }
    const Symbol pv = a[col * n + col];
    det = f.mul(det, pv);
    const Symbol pv_inv = f.inv(pv);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Symbol factor = f.mul(a[r * n + col], pv_inv);
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, a[col * n + c]));
    }
  }
  return det;
}

}  // namespace detail

/// Exact determinant by Gaussian elimination.
inline FieldElement determinant(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant of a non-square matrix");
  std::vector<Symbol> a(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r * m.cols() + c] = m(r, c);
  return m.field().element(detail::eliminate_determinant(m.field(), a, m.rows()));
}

/// Determinant of the columns `columns` of m, without materializing a Matrix.
inline Symbol minor_determinant(const Matrix& m, std::span<const std::size_t> columns) {
  const std::size_t n = columns.size();
  if (n != m.rows()) throw InvalidArgument("minor must be square");
  std::vector<Symbol> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, columns[c]);
  return detail::eliminate_determinant(m.field(), a, n);
}

/// prod_{i<j} (x_j - x_i).
inline Symbol vandermonde_det(const Field& field, std::span<const Symbol> points) {
  Symbol v = 1;
  for (std::size_t j = 0; j < points.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) v = field.mul(v, field.sub(points[j], points[i]));
  return v;
}

inline FieldElement vandermonde_det(std::span<const FieldElement> points) {
  if (points.empty()) throw InvalidArgument("Vandermonde determinant of an empty point list");
  const Field& field = points.front().field();
  std::vector<Symbol> xs;
  xs.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.field() == field)) throw FieldMismatch();
    xs.push_back(p.value());
  }
  return field.element(vandermonde_det(field, xs));
}

struct MdsCheck {
  bool is_mds = true;
  /// First singular column subset in lexicographic order, when not MDS.
  std::optional<std::vector<std::size_t>> singular_columns;
};

/// True iff every k-column minor of the k-row matrix g is nonsingular.
inline MdsCheck mds_generator_check(const Matrix& g, std::size_t k) {
  if (g.rows() != k) throw InvalidArgument("generator must have exactly k rows");
  if (g.cols() < k) throw InvalidArgument("generator must have at least k columns");
  MdsCheck result;
  for_each_combination(g.cols(), k, [&](const std::vector<std::size_t>& cols) {
    if (minor_determinant(g, cols) != 0) return true;
    result.is_mds = false;
    result.singular_columns = cols;
    return false;
  });
  return result;
}

/// Solves x * A = b for square A (x and b row vectors). Empty when A is singular.
inline std::optional<std::vector<Symbol>> solve_left(const Matrix& a, std::span<const Symbol> b) {
  if (!a.is_square() || b.size() != a.cols()) throw InvalidArgument("solve_left needs a square system");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  // Work on the transposed system A^T x^T = b^T with an augmented column.
  const std::size_t w = n + 1;
  std::vector<Symbol> m(n * w);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * w + c] = a(c, r);
    m[r * w + n] = b[r];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot * w + col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t c = 0; c < w; ++c) std::swap(m[pivot * w + c], m[col * w + c]);
    const Symbol inv = f.inv(m[col * w + col]);
    for (std::size_t c = col; c < w; ++c) m[col * w + c] = f.mul(m[col * w + c], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Symbol factor = m[r * w + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < w; ++c) m[r * w + c] = f.sub(m[r * w + c], f.mul(factor, m[col * w + c]));
    }
  }
  std::vector<Symbol> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = m[r * w + n];
  return x;
}

}  // namespace gprs
