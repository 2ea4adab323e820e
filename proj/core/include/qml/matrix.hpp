#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qml/error.hpp"
#include "qml/field.hpp"

namespace qml {

/// Dense row-major matrix over a field F. Zero-row and zero-column matrices
/// are ordinary values and behave as linear maps to or from the zero space.
template <class F>
class Matrix {
 public:
  using Field = F;
  using Element = typename F::Element;

  Matrix() : Matrix(F{}, 0, 0) {}
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from integer literals, reduced into the field.
  static Matrix from_ints(const F& field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
      std::size_t j = 0;
      for (long long v : row) m(i, j++) = field.from_integer(v);
      ++i;
    }
    return m;
  }

  static Matrix from_ints(const F& field, std::size_t rows, std::size_t cols, const std::vector<long long>& entries) {
    if (entries.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
    Matrix m(field, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.from_integer(entries[k]);
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Element>& data() const { return data_; }
  std::vector<Element>& data() { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& e) { return field_.is_zero(e); });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r0+n) and columns [c0, c0+m).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t n, std::size_t m) const {
    if (r0 + n > rows_ || c0 + m > cols_) throw DimensionMismatch("block out of range");
    Matrix b(field_, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix scaled(const Element& s) const {
    Matrix r = *this;
    for (auto& e : r.data_) e = field_.mul(s, e);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matmul: " + a.shape() + " * " + b.shape());
    const F& k = a.field_;
    Matrix c(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Element& x = a(i, l);
        if (k.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = k.add(c(i, j), k.mul(x, b(l, j)));
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "add");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "sub");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.sub(a.data_[k], b.data_[k]);
    return c;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& e : c.data_) e = a.field_.neg(e);
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw DimensionMismatch(std::string(op) + ": " + shape() + " vs " + b.shape());
  }

  F field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

using FpMatrix = Matrix<PrimeField>;
using QMatrix = Matrix<RationalField>;

template <class F>
struct RrefResult {
  Matrix<F> matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  const F& k = m.field();
  RrefResult<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && k.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    if (!k.is_one(m(row, col))) {
      auto inv = k.inv(m(row, col));
      for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = k.mul(inv, m(row, j));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m(i, col))) continue;
      auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(row, j)));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.matrix = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Columns form a basis of ker m: one column per free variable, carrying a 1
/// in that variable's slot, ordered by free column index.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<F> basis(k, m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = k.one();
    for (std::size_t i = 0; i < r.rank; ++i) basis(r.pivots[i], f) = k.neg(r.matrix(i, free[f]));
  }
  return basis;
}

/// Canonical basis of the row space: the nonzero rows of the RREF.
template <class F>
Matrix<F> row_space(const Matrix<F>& m) {
  auto r = rref(m);
  return r.matrix.block(0, 0, r.rank, m.cols());
}

/// Columns form a basis of the column space of m (canonical: transposed row
/// space of the transpose).
template <class F>
Matrix<F> image_basis(const Matrix<F>& m) {
  return row_space(m.transpose()).transpose();
}

template <class F>
Matrix<F> hstack(const std::vector<Matrix<F>>& parts, const F& field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw DimensionMismatch("hstack: row count mismatch");
    cols += p.cols();
  }
  Matrix<F> out(field, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

template <class F>
Matrix<F> vstack(const std::vector<Matrix<F>>& parts, const F& field, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionMismatch("vstack: column count mismatch");
    rows += p.rows();
  }
  Matrix<F> out(field, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    out.set_block(r, 0, p);
    r += p.rows();
  }
  return out;
}

/// Assembles a grid of blocks. Every block in a grid row shares a row count and
/// every block in a grid column shares a column count.
template <class F>
Matrix<F> block_assemble(const std::vector<std::vector<Matrix<F>>>& grid, const F& field) {
  if (grid.empty()) return Matrix<F>(field, 0, 0);
  const std::size_t gcols = grid.front().size();
  std::vector<std::size_t> heights(grid.size()), widths(gcols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != gcols) throw DimensionMismatch("block_assemble: ragged grid");
    heights[i] = gcols == 0 ? 0 : grid[i][0].rows();
  }
  for (std::size_t j = 0; j < gcols; ++j) widths[j] = grid[0][j].cols();
  std::size_t total_r = 0, total_c = 0;
  for (auto h : heights) total_r += h;
  for (auto w : widths) total_c += w;
  Matrix<F> out(field, total_r, total_c);
  std::size_t r = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < gcols; ++j) {
      const auto& b = grid[i][j];
      if (b.rows() != heights[i] || b.cols() != widths[j])
        throw DimensionMismatch("block_assemble: inconsistent partition at block (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      out.set_block(r, c, b);
      c += widths[j];
    }
    r += heights[i];
  }
  return out;
}

template <class F>
Matrix<F> block_diagonal(const std::vector<Matrix<F>>& blocks, const F& field) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix<F> out(field, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

template <class F>
Matrix<F> invert(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("invert: matrix is " + m.shape());
  const std::size_t n = m.rows();
  const F& k = m.field();
  Matrix<F> aug(k, n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix<F>::identity(k, n));
  auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw SingularMatrix("invert: matrix is singular");
  return r.matrix.block(0, n, n, n);
}

template <class F>
bool is_invertible(const Matrix<F>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class F>
typename F::Element determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is " + m.shape());
  const F& k = m.field();
  auto det = k.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && k.is_zero(m(piv, col))) ++piv;
    if (piv == n) return k.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = k.neg(det);
    }
    det = k.mul(det, m(col, col));
    auto inv = k.inv(m(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (k.is_zero(m(i, col))) continue;
      auto factor = k.mul(m(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) = k.sub(m(i, j), k.mul(factor, m(col, j)));
    }
  }
  return det;
}

/// True iff the row space of `sub` is contained in the row space of `space`.
template <class F>
bool row_space_contains(const Matrix<F>& space, const Matrix<F>& sub) {
  if (sub.rows() == 0) return true;
  const std::size_t r = rank(space);
  return rank(vstack<F>({space, sub}, space.field(), space.cols())) == r;
}

}  // namespace qml
