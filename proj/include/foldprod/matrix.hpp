#ifndef FOLDPROD_MATRIX_HPP
#define FOLDPROD_MATRIX_HPP

/**
 * @file matrix.hpp
 * @brief Dense exact matrices, canonical reduced row echelon form, and the
 *        subspace calculus built on top of it.
 *
 * A RowSpace always stores the canonical RREF basis of the subspace it
 * represents, so two subspaces are equal iff their stored bases are equal
 * entrywise.  All operations are deterministic: pivot choice depends only on
 * position, never on element magnitude, and no randomization is used
 * anywhere.
 */

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "foldprod/errors.hpp"
#include "foldprod/field.hpp"

namespace foldprod {

template <ExactField K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, K{0}) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<K> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const K> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// Appends a row; on an empty matrix this fixes the column count.
  void append_row(std::span<const K> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionError("appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    const K zero{0};
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& a = (*this)(r, k);
        if (a == zero) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
          const K& b = rhs(k, c);
          if (b == zero) continue;
          out(r, c) += a * b;
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    const K zero{0};
    for (const K& x : data_)
      if (!(x == zero)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

/**
 * In-place reduction to canonical RREF: pivots are 1, pivot columns are
 * otherwise zero, pivot columns strictly increase down the rows, and zero
 * rows are dropped.  Returns the pivot columns in increasing order; the rank
 * is their count.
 *
 * Rows are absorbed one at a time against the pivots found so far, which
 * keeps the work proportional to the sparsity of the input, then a single
 * back-substitution pass canonicalizes.
 */
template <ExactField K>
std::vector<std::size_t> rref_in_place(Matrix<K>& m) {
  const std::size_t cols = m.cols();
  const K zero{0};
  std::vector<std::vector<K>> rows;            // echelon rows, leading 1
  std::map<std::size_t, std::size_t> pivot_at; // pivot column -> row index

  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<K> row(m.row(r).begin(), m.row(r).end());
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == zero) continue;
      auto it = pivot_at.find(c);
      if (it == pivot_at.end()) {
        const K inv = K{1} / row[c];
        row[c] = K{1};
        for (std::size_t j = c + 1; j < cols; ++j)
          if (!(row[j] == zero)) row[j] = row[j] * inv;
        pivot_at.emplace(c, rows.size());
        rows.push_back(std::move(row));
        break;
      }
      const std::vector<K>& p = rows[it->second];
      const K f = row[c];
      row[c] = zero;
      for (std::size_t j = c + 1; j < cols; ++j)
        if (!(p[j] == zero)) row[j] = row[j] - f * p[j];
    }
  }

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> order;  // row indices sorted by pivot column
  pivots.reserve(rows.size());
  order.reserve(rows.size());
  for (const auto& [col, idx] : pivot_at) {
    pivots.push_back(col);
    order.push_back(idx);
  }

  std::vector<std::vector<K>> basis(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) basis[i] = std::move(rows[order[i]]);

  // Clear entries above each pivot, working upward so every subtrahend row is
  // already fully reduced.
  for (std::size_t i = basis.size(); i-- > 0;) {
    for (std::size_t t = i + 1; t < basis.size(); ++t) {
      const K f = basis[i][pivots[t]];
      if (f == zero) continue;
      basis[i][pivots[t]] = zero;
      for (std::size_t j = pivots[t] + 1; j < cols; ++j)
        if (!(basis[t][j] == zero)) basis[i][j] = basis[i][j] - f * basis[t][j];
    }
  }

  Matrix<K> out(basis.size(), cols);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(basis[i][j]);
  m = std::move(out);
  return pivots;
}

/**
 * A linear subspace of K^ambient stored via its canonical RREF basis.
 * Default-constructed or rank-0 spaces have an empty basis matrix.
 */
template <ExactField K>
struct RowSpace {
  std::size_t ambient = 0;
  Matrix<K> basis;                  // RREF, one row per basis vector
  std::vector<std::size_t> pivots;  // increasing

  std::size_t dim() const { return pivots.size(); }

  friend bool operator==(const RowSpace&, const RowSpace&) = default;
};

template <ExactField K>
RowSpace<K> row_space(Matrix<K> m) {
  RowSpace<K> s;
  s.ambient = m.cols();
  s.pivots = rref_in_place(m);
  s.basis = std::move(m);
  return s;
}

template <ExactField K>
RowSpace<K> zero_space(std::size_t ambient) {
  RowSpace<K> s;
  s.ambient = ambient;
  s.basis = Matrix<K>(0, ambient);
  return s;
}

template <ExactField K>
RowSpace<K> full_space(std::size_t ambient) {
  RowSpace<K> s;
  s.ambient = ambient;
  s.basis = Matrix<K>::identity(ambient);
  s.pivots.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots[i] = i;
  return s;
}

/// Canonical representative of v modulo the space; zero iff v lies in it.
/// The result vanishes on all pivot columns.
template <ExactField K>
std::vector<K> reduce_mod(const RowSpace<K>& space, std::span<const K> v) {
  if (v.size() != space.ambient) throw DimensionError("vector/ambient mismatch");
  std::vector<K> out(v.begin(), v.end());
  const K zero{0};
  for (std::size_t i = 0; i < space.pivots.size(); ++i) {
    const K f = out[space.pivots[i]];
    if (f == zero) continue;
    out[space.pivots[i]] = zero;
    auto row = space.basis.row(i);
    for (std::size_t j = space.pivots[i] + 1; j < space.ambient; ++j)
      if (!(row[j] == zero)) out[j] = out[j] - f * row[j];
  }
  return out;
}

template <ExactField K>
bool contains(const RowSpace<K>& space, std::span<const K> v) {
  const K zero{0};
  for (const K& x : reduce_mod(space, v))
    if (!(x == zero)) return false;
  return true;
}

/**
 * Matrix whose kernel is exactly the space: one row per non-pivot coordinate
 * c, expressing the c-th coordinate of the canonical representative mod the
 * space.  Shape (ambient - dim) x ambient.  This is the cheap dual form of a
 * subspace; intersections stack these rows.
 */
template <ExactField K>
Matrix<K> cospace_matrix(const RowSpace<K>& space) {
  const std::size_t ambient = space.ambient;
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : space.pivots) is_pivot[p] = true;
  Matrix<K> q(ambient - space.dim(), ambient);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (is_pivot[c]) continue;
    q(r, c) = K{1};
    for (std::size_t i = 0; i < space.pivots.size(); ++i)
      q(r, space.pivots[i]) = -space.basis(i, c);
    ++r;
  }
  return q;
}

/// Kernel {v : m v = 0}, canonical.
template <ExactField K>
RowSpace<K> kernel(Matrix<K> m) {
  const std::size_t n = m.cols();
  const std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  Matrix<K> basis(n - pivots.size(), n);
  std::size_t r = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(r, f) = K{1};
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(r, pivots[i]) = -m(i, f);
    ++r;
  }
  return row_space(std::move(basis));
}

template <ExactField K>
RowSpace<K> subspace_sum(const RowSpace<K>& a, const RowSpace<K>& b) {
  if (a.ambient != b.ambient) throw DimensionError("subspace_sum ambient mismatch");
  Matrix<K> stack(0, a.ambient);
  for (std::size_t i = 0; i < a.basis.rows(); ++i) stack.append_row(a.basis.row(i));
  for (std::size_t i = 0; i < b.basis.rows(); ++i) stack.append_row(b.basis.row(i));
  return row_space(std::move(stack));
}

template <ExactField K>
bool subspace_leq(const RowSpace<K>& a, const RowSpace<K>& b) {
  if (a.ambient != b.ambient) throw DimensionError("subspace_leq ambient mismatch");
  if (a.dim() > b.dim()) return false;
  for (std::size_t i = 0; i < a.basis.rows(); ++i)
    if (!contains(b, a.basis.row(i))) return false;
  return true;
}

template <ExactField K>
RowSpace<K> subspace_intersect(const RowSpace<K>& a, const RowSpace<K>& b) {
  if (a.ambient != b.ambient)
    throw DimensionError("subspace_intersect ambient mismatch");
  Matrix<K> qa = cospace_matrix(a);
  Matrix<K> qb = cospace_matrix(b);
  Matrix<K> stack(0, a.ambient);
  for (std::size_t i = 0; i < qa.rows(); ++i) stack.append_row(qa.row(i));
  for (std::size_t i = 0; i < qb.rows(); ++i) stack.append_row(qb.row(i));
  return kernel(std::move(stack));
}

/// Intersection of any number of subspaces of a common ambient space.
template <ExactField K>
RowSpace<K> intersect_many(std::span<const RowSpace<K>> spaces,
                           std::size_t ambient) {
  Matrix<K> stack(0, ambient);
  for (const RowSpace<K>& s : spaces) {
    if (s.ambient != ambient)
      throw DimensionError("intersect_many ambient mismatch");
    Matrix<K> q = cospace_matrix(s);
    for (std::size_t i = 0; i < q.rows(); ++i) stack.append_row(q.row(i));
  }
  if (stack.rows() == 0) return full_space<K>(ambient);
  return kernel(std::move(stack));
}

/// Image of a row space under the linear map given by `map` acting on column
/// vectors: span { map . v : v in space }.
template <ExactField K>
RowSpace<K> apply_map(const Matrix<K>& map, const RowSpace<K>& space) {
  if (map.cols() != space.ambient) throw DimensionError("apply_map shape mismatch");
  // rows are basis vectors, so the image rows are basis . map^T
  Matrix<K> image = space.basis * map.transposed();
  return row_space(std::move(image));
}

/// Preimage {v : map . v in target}.  `map` has target.ambient rows.
template <ExactField K>
RowSpace<K> preimage(const Matrix<K>& map, const RowSpace<K>& target) {
  if (map.rows() != target.ambient) throw DimensionError("preimage shape mismatch");
  Matrix<K> q = cospace_matrix(target);
  return kernel(q * map);
}

}  // namespace foldprod

#endif
