#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "positroid/error.hpp"

namespace positroid {

using index_t = std::int64_t;

/// Floor division and nonnegative remainder for possibly negative integers.
constexpr index_t floor_div(index_t a, index_t b) noexcept {
  index_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr index_t floor_mod(index_t a, index_t b) noexcept { return a - b * floor_div(a, b); }

constexpr index_t gcd_index(index_t a, index_t b) noexcept {
  while (b != 0) {
    const index_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

constexpr index_t lcm_index(index_t a, index_t b) noexcept { return a / gcd_index(a, b) * b; }

using binary_row = std::vector<std::uint8_t>;

/// One block of a column-periodic 0/1 matrix. Columns are indexed from 1 and
/// extended periodically in both directions with period width().
class binary_periodic_matrix {
 public:
  binary_periodic_matrix(int n, std::vector<binary_row> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ <= 0) throw error(errc::invalid_parameters, "period n must be positive");
    if (rows_.empty()) throw error(errc::invalid_parameters, "matrix needs at least one row");
    const std::size_t w = rows_.front().size();
    if (w == 0 || w % static_cast<std::size_t>(n_) != 0)
      throw error(errc::invalid_parameters, "block width " + std::to_string(w) + " is not a positive multiple of n");
    for (const auto& row : rows_) {
      if (row.size() != w) throw error(errc::invalid_parameters, "rows of unequal length");
      for (auto v : row)
        if (v > 1) throw error(errc::invalid_parameters, "entries must be 0 or 1");
    }
  }

  int n() const noexcept { return n_; }
  std::size_t height() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return rows_.front().size(); }
  const std::vector<binary_row>& rows() const noexcept { return rows_; }

  std::uint8_t at(std::size_t row, index_t col) const {
    return rows_[row][static_cast<std::size_t>(floor_mod(col - 1, static_cast<index_t>(width())))];
  }

  /// Row holding the single 1 of column `col`, if the column is a standard basis vector.
  std::optional<std::size_t> column_support(index_t col) const {
    std::optional<std::size_t> hit;
    for (std::size_t r = 0; r < height(); ++r) {
      if (at(r, col) == 0) continue;
      if (hit) return std::nullopt;
      hit = r;
    }
    return hit;
  }

  bool has_standard_basis_columns() const {
    for (index_t c = 1; c <= static_cast<index_t>(width()); ++c)
      if (!column_support(c)) return false;
    return true;
  }

  bool has_nonzero_rows() const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const binary_row& r) { return std::find(r.begin(), r.end(), 1) != r.end(); });
  }

  /// Rows sorted by the column of their first 1; zero rows go last.
  binary_periodic_matrix canonical() const {
    auto sorted = rows_;
    std::stable_sort(sorted.begin(), sorted.end(), [](const binary_row& a, const binary_row& b) {
      return std::find(a.begin(), a.end(), 1) - a.begin() < std::find(b.begin(), b.end(), 1) - b.begin();
    });
    return {n_, std::move(sorted)};
  }

  friend bool operator==(const binary_periodic_matrix&, const binary_periodic_matrix&) = default;

 private:
  int n_;
  std::vector<binary_row> rows_;
};

}  // namespace positroid
