#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/errors.hpp"
#include "hopfpi/field.hpp"

namespace hopfpi {

template <ExactField K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact field. A linear map V -> W is stored
/// as a dim(W) x dim(V) matrix acting on column vectors.
template <ExactField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix column(std::span<const K> v) {
    Matrix m(v.size(), 1);
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
  }
  static Matrix row(std::span<const K> v) {
    Matrix m(1, v.size());
    std::copy(v.begin(), v.end(), m.data_.begin());
    return m;
  }
  /// Columns must all have length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec<K>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw ShapeMismatch("column length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }
  static Matrix from_rows(std::size_t cols, const std::vector<Vec<K>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeMismatch("row length");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const K> entries() const { return data_; }

  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<K> row_vec(std::size_t i) const {
    return Vec<K>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("product " + shape() + " * " + o.shape());
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const K& b = o(k, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }

  Vec<K> apply(std::span<const K> v) const {
    if (v.size() != cols_) throw ShapeMismatch("apply " + shape() + " to vector of length " + std::to_string(v.size()));
    Vec<K> r(rows_);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (v[k].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const K& a = (*this)(i, k);
        if (!a.is_zero()) r[i] += a * v[k];
      }
    }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }
  Matrix scaled(const K& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  bool operator==(const Matrix&) const = default;

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
  }

  /// Rows [first, first+count) as a new matrix.
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix r(count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), r.data_.begin());
    return r;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("sum " + shape() + " + " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <ExactField K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack " + a.shape() + " | " + b.shape());
  Matrix<K> r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <ExactField K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack " + a.shape() + " / " + b.shape());
  return hstack(a.transpose(), b.transpose()).transpose();
}

/// Kronecker product, left factor major: entry ((i*rows(b)+k), (j*cols(b)+l)) = a(i,j) b(k,l).
template <ExactField K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const K& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const K& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

template <ExactField K>
Vec<K> kron(std::span<const K> a, std::span<const K> b) {
  Vec<K> r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

template <ExactField K>
Vec<K> kron(const Vec<K>& a, const Vec<K>& b) {
  return kron(std::span<const K>(a), std::span<const K>(b));
}

template <ExactField K>
Vec<K> unit_vector(std::size_t n, std::size_t i) {
  Vec<K> v(n);
  v.at(i) = K(1);
  return v;
}

/// Permutation matrix V_0 ⊗ ... ⊗ V_{n-1} -> V_{perm[0]} ⊗ ... ⊗ V_{perm[n-1]}.
template <ExactField K>
Matrix<K> permute_factors(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  const std::size_t n = dims.size();
  if (perm.size() != n) throw ShapeMismatch("permutation length");
  const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  Matrix<K> m(total, total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t f = n; f-- > 0;) {
      idx[f] = rest % dims[f];
      rest /= dims[f];
    }
    std::size_t out = 0;
    for (std::size_t k = 0; k < n; ++k) out = out * dims[perm[k]] + idx[perm[k]];
    m(out, flat) = K(1);
  }
  return m;
}

/// The transposition V ⊗ W -> W ⊗ V: basis index i*dim_b+j goes to j*dim_a+i.
template <ExactField K>
Matrix<K> swap_map(std::size_t dim_a, std::size_t dim_b) {
  return permute_factors<K>({dim_a, dim_b}, {1, 0});
}

template <ExactField K>
struct RrefResult {
  Matrix<K> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <ExactField K>
RrefResult<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).rank();
}

/// A subspace of K^n held by its canonical basis: the rows of a matrix in
/// reduced row echelon form with no zero rows. Equal subspaces have
/// identical bases.
template <ExactField K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const Matrix<K>& rows) {
    auto [reduced, pivots] = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = reduced.row_block(0, pivots.size());
    s.pivots_ = std::move(pivots);
    return s;
  }
  static Subspace span(std::size_t ambient, const std::vector<Vec<K>>& vectors) {
    return span(Matrix<K>::from_rows(ambient, vectors));
  }
  static Subspace whole(std::size_t n) { return span(Matrix<K>::identity(n)); }
  static Subspace zero(std::size_t n) { return span(Matrix<K>(0, n)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<K> vector(std::size_t i) const { return basis_.row_vec(i); }

  /// ambient x dim matrix whose columns are the basis vectors.
  Matrix<K> embedding() const { return basis_.transpose(); }

  /// Coordinates of v in the canonical basis, or nullopt when v is outside.
  std::optional<Vec<K>> coordinates(std::span<const K> v) const {
    if (v.size() != ambient_) throw ShapeMismatch("subspace membership: vector length");
    Vec<K> coords(dim());
    for (std::size_t i = 0; i < dim(); ++i) coords[i] = v[pivots_[i]];
    const Vec<K> back = basis_.transpose().apply(coords);
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!(back[j] == v[j])) return std::nullopt;
    return coords;
  }
  bool contains(std::span<const K> v) const { return coordinates(v).has_value(); }

  /// Coordinates of every column of `m`, or nullopt if some column is outside.
  std::optional<Matrix<K>> coordinates_of_columns(const Matrix<K>& m) const {
    Matrix<K> out(dim(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto c = coordinates(m.col(j));
      if (!c) return std::nullopt;
      for (std::size_t i = 0; i < dim(); ++i) out(i, j) = (*c)[i];
    }
    return out;
  }

  bool operator==(const Subspace&) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0} with its canonical basis.
template <ExactField K>
Subspace<K> null_space(const Matrix<K>& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<K>> vectors;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(m.cols());
    v[f] = K(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace<K>::span(m.cols(), vectors);
}

/// Particular solution of a x = b with free variables set to zero, or
/// nullopt when the system is inconsistent. `b` may have several columns.
template <ExactField K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve " + a.shape() + " against " + b.shape());
  const auto [reduced, pivots] = rref(hstack(a, b));
  const std::size_t n = a.cols();
  for (std::size_t p : pivots)
    if (p >= n) return std::nullopt;
  Matrix<K> x(n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = reduced(r, n + j);
  return x;
}

/// r with m r = identity when m is surjective; free variables zeroed.
template <ExactField K>
std::optional<Matrix<K>> solve_right_inverse(const Matrix<K>& m) {
  return solve(m, Matrix<K>::identity(m.rows()));
}

template <ExactField K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix<K>::identity(m.rows()));
}

/// Span of {a_i ⊗ b_j} inside K^(na*nb).
template <ExactField K>
Subspace<K> tensor(const Subspace<K>& a, const Subspace<K>& b) {
  return Subspace<K>::span(kron(a.basis(), b.basis()));
}

/// a + b inside a common ambient space.
template <ExactField K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw ShapeMismatch("subspace sum ambient");
  return Subspace<K>::span(vstack(a.basis(), b.basis()));
}

/// Matrix of a linear operator given by its action on the unit vectors of K^n.
template <ExactField K, class F>
Matrix<K> matrix_of(std::size_t n, std::size_t out_dim, F&& image) {
  std::vector<Vec<K>> columns;
  columns.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec<K> c = image(j);
    if (c.size() != out_dim) throw ShapeMismatch("operator image length");
    columns.push_back(std::move(c));
  }
  return Matrix<K>::from_columns(out_dim, columns);
}

template <ExactField K>
std::vector<std::string> to_strings(std::span<const K> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

/// Column-major flattening: entry (i, j) goes to index j*rows+i.
template <ExactField K>
Vec<K> flatten(const Matrix<K>& m) {
  Vec<K> v(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v[j * m.rows() + i] = m(i, j);
  return v;
}

template <ExactField K>
Matrix<K> unflatten(std::span<const K> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw ShapeMismatch("unflatten length");
  Matrix<K> m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[j * rows + i];
  return m;
}

/// Matrix of a linear map on rows x cols matrices, in flattened coordinates.
template <ExactField K, class F>
Matrix<K> matrix_of_operator(std::size_t rows, std::size_t cols, F&& op) {
  std::vector<Vec<K>> columns;
  columns.reserve(rows * cols);
  std::size_t out = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      Matrix<K> e(rows, cols);
      e(i, j) = K(1);
      columns.push_back(flatten(op(e)));
      out = columns.back().size();
    }
  return Matrix<K>::from_columns(out, columns);
}

}  // namespace hopfpi
