#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/rational.hpp"

namespace positroid {

/// Dense row-major matrix. Small sizes only; nothing here is tuned.
template <typename T>
class matrix {
 public:
  matrix() = default;
  matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw error(errc::invalid_parameters, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static matrix from_rows(const std::vector<std::vector<T>>& rows) {
    matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw error(errc::invalid_parameters, "ragged matrix rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  matrix transpose() const {
    matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const matrix&, const matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using rational_matrix = matrix<rational>;
using rational_vector = std::vector<rational>;

template <typename T>
matrix<T> operator*(const matrix<T>& a, const matrix<T>& b) {
  if (a.cols() != b.rows()) throw error(errc::invalid_parameters, "matrix product shape mismatch");
  matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

template <typename T>
T dot(std::span<const T> a, std::span<const T> b) {
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline rational dot(const rational_vector& a, const rational_vector& b) {
  return dot<rational>(std::span<const rational>(a), std::span<const rational>(b));
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// division below is exact.
inline std::size_t bareiss_rank(matrix<integer> a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && a(pivot, col) == 0) ++pivot;
    if (pivot == m) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(rank, c));
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t c = col + 1; c < n; ++c) {
        a(r, c) = (a(rank, col) * a(r, c) - a(r, col) * a(rank, c)) / prev;
      }
      a(r, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Scales each row by the lcm of its denominators.
inline matrix<integer> clear_denominators(const rational_matrix& a) {
  matrix<integer> out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    integer l = 1;
    for (const auto& q : a.row(r)) l = boost::multiprecision::lcm(l, integer(denominator(q)));
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = numerator(a(r, c)) * (l / denominator(a(r, c)));
  }
  return out;
}

inline std::size_t rank(const rational_matrix& a) { return bareiss_rank(clear_denominators(a)); }

/// Rank of the span of the given columns (0-based indices, may repeat).
inline std::size_t column_rank(const matrix<integer>& a, std::span<const std::size_t> columns) {
  if (columns.empty()) return 0;
  matrix<integer> block(columns.size(), a.rows());
  for (std::size_t t = 0; t < columns.size(); ++t)
    for (std::size_t r = 0; r < a.rows(); ++r) block(t, r) = a(r, columns[t]);
  return bareiss_rank(std::move(block));
}

inline std::size_t column_rank(const rational_matrix& a, std::span<const std::size_t> columns) {
  return column_rank(clear_denominators(a), columns);
}

struct echelon_form {
  rational_matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over the rationals.
inline echelon_form rref(rational_matrix a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

/// Basis of {x : a x = 0}: one vector per free column, with 1 in that column.
inline std::vector<rational_vector> nullspace(const rational_matrix& a) {
  const auto [red, pivots] = rref(a);
  std::vector<rational_vector> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    rational_vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A point of G(k,n): a full-rank k x n rational matrix with 0 < k < n.
/// Its rows span the subspace; column i is the vector v_i.
class grassmann_point {
 public:
  explicit grassmann_point(rational_matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() >= m_.cols())
      throw error(errc::invalid_parameters, "need 0 < k < n, got k=" + std::to_string(m_.rows()) +
                                                " n=" + std::to_string(m_.cols()));
    if (positroid::rank(m_) != m_.rows())
      throw error(errc::rank_deficient, "row rank below k=" + std::to_string(m_.rows()));
  }

  int k() const noexcept { return static_cast<int>(m_.rows()); }
  int n() const noexcept { return static_cast<int>(m_.cols()); }
  const rational_matrix& entries() const noexcept { return m_; }

  rational_vector row_vector(std::size_t a) const {
    auto r = m_.row(a);
    return {r.begin(), r.end()};
  }

 private:
  rational_matrix m_;
};

}  // namespace positroid
