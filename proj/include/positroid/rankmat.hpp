#pragma once

#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "positroid/affperm.hpp"
#include "positroid/error.hpp"
#include "positroid/linalg.hpp"
#include "positroid/periodic_matrix.hpp"

namespace positroid {

/// An n-periodic integer matrix r_ij = j - i + 1 - h_ij. Only the band
/// i - 1 <= j <= i + n - 1 for i in [1, n] is stored (as h); outside it
///   h_ij = 0               for j < i
///   h_ij = j - i + 1 - k   for j >= i + n - 1.
class cyclic_rank_matrix {
 public:
  /// h_band[i-1][t] = h_{i, i-1+t} for t = 0..n.
  cyclic_rank_matrix(int n, int k, std::vector<std::vector<index_t>> h_band)
      : n_(n), k_(k), band_(std::move(h_band)) {
    if (!(0 < k_ && k_ < n_))
      throw error(errc::invalid_parameters, "need 0 < k < n, got k=" + std::to_string(k_) + " n=" + std::to_string(n_));
    if (band_.size() != static_cast<std::size_t>(n_))
      throw error(errc::invalid_parameters, "h_band needs n rows");
    for (const auto& row : band_)
      if (row.size() != static_cast<std::size_t>(n_ + 1))
        throw error(errc::invalid_parameters, "h_band rows need n + 1 entries");
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<std::vector<index_t>>& h_band() const noexcept { return band_; }

  index_t h(index_t i, index_t j) const {
    const index_t i0 = floor_mod(i - 1, n_) + 1;
    const index_t j0 = j - (i - i0);
    if (j0 < i0 - 1) return 0;
    if (j0 > i0 + n_ - 1) return j0 - i0 + 1 - k_;
    return band_[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j0 - i0 + 1)];
  }

  index_t r(index_t i, index_t j) const { return j - i + 1 - h(i, j); }

  friend bool operator==(const cyclic_rank_matrix&, const cyclic_rank_matrix&) = default;

 private:
  int n_;
  int k_;
  std::vector<std::vector<index_t>> band_;
};

/// max(d_{i-1} + d_i + ... + d_j - 1, 0) with indices read cyclically
/// (1-based) in a sequence of period d.size().
template <std::ranges::random_access_range Seq>
index_t s_window(const Seq& d, index_t i, index_t j) {
  if (j < i) throw error(errc::empty_window, "j=" + std::to_string(j) + " < i=" + std::to_string(i));
  const auto period = static_cast<index_t>(std::ranges::size(d));
  if (period == 0) throw error(errc::invalid_parameters, "empty sequence");
  index_t sum = 0;
  for (index_t t = i - 1; t <= j; ++t) sum += static_cast<index_t>(d[static_cast<std::size_t>(floor_mod(t - 1, period))]);
  return std::max<index_t>(sum - 1, 0);
}

namespace detail {

inline index_t h_of_rows(const binary_periodic_matrix& a, index_t i, index_t j) {
  const index_t n = a.n();
  const index_t k = static_cast<index_t>(a.height()) - 1;
  if (j < i) return 0;
  if (j >= i + n - 1) return j - i + 1 - k;
  index_t h = 0;
  for (const auto& row : a.rows()) h += s_window(row, i, j);
  return h;
}

inline void require_standard_columns(const binary_periodic_matrix& a) {
  if (!a.has_standard_basis_columns())
    throw error(errc::invalid_columns, "some column is not a standard basis vector");
  if (!a.has_nonzero_rows()) throw error(errc::invalid_columns, "zero row");
}

}  // namespace detail

/// h_ij of a (k+1)-row matrix with standard-basis columns.
inline index_t h_of_A(const binary_periodic_matrix& a, index_t i, index_t j) {
  detail::require_standard_columns(a);
  return detail::h_of_rows(a, i, j);
}

namespace detail {

inline cyclic_rank_matrix rank_matrix_of_rows(const binary_periodic_matrix& a) {
  require_standard_columns(a);
  const int n = a.n();
  std::vector<std::vector<index_t>> band(static_cast<std::size_t>(n));
  for (index_t i = 1; i <= n; ++i)
    for (index_t j = i - 1; j <= i + n - 1; ++j) band[static_cast<std::size_t>(i - 1)].push_back(h_of_rows(a, i, j));
  return {n, static_cast<int>(a.height()) - 1, std::move(band)};
}

}  // namespace detail

/// r(f) through the characteristic matrix of f o s_+.
inline cyclic_rank_matrix r_of_perm(const affine_permutation& f) {
  require_plus(f);
  return detail::rank_matrix_of_rows(characteristic_matrix(f));
}

struct axiom_check {
  std::string axiom;
  bool satisfied = true;
  std::vector<std::pair<index_t, index_t>> witnesses;
};

struct axiom_report {
  std::vector<axiom_check> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const axiom_check& c) { return c.satisfied; });
  }
};

/// Checks C1', C2', C3, C4, C5 on one period. Outside the stored band the
/// closed forms satisfy C3 and C4 on their own, so scanning j in
/// [i - 2, i + n + 1] covers every transition into and out of the band.
inline axiom_report check_axioms(const cyclic_rank_matrix& r) {
  const index_t n = r.n();
  const index_t k = r.k();
  axiom_check c1{"C1'", true, {}}, c2{"C2'", true, {}}, c3{"C3", true, {}}, c4{"C4", true, {}}, c5{"C5", true, {}};
  auto fail = [](axiom_check& c, index_t i, index_t j) {
    c.satisfied = false;
    c.witnesses.emplace_back(i, j);
  };
  for (index_t i = 1; i <= n; ++i) {
    if (r.r(i, i - 1) != 0) fail(c1, i, i - 1);
    if (r.r(i, i + n - 1) != k) fail(c2, i, i + n - 1);
    for (index_t j = i - 2; j <= i + n + 1; ++j) {
      const index_t down = r.r(i, j) - r.r(i + 1, j);
      const index_t left = r.r(i, j) - r.r(i, j - 1);
      if (down < 0 || down > 1 || left < 0 || left > 1) fail(c3, i, j);
      const index_t corner = r.r(i + 1, j - 1);
      if (corner == r.r(i + 1, j) && corner == r.r(i, j - 1) && corner != r.r(i, j)) fail(c4, i, j);
    }
  }
  // C5 holds by construction: only one period is stored.
  return {{c1, c2, c3, c4, c5}};
}

/// The bounded affine permutation with f(i) = j exactly where
/// r_ij = r_{i+1,j} = r_{i,j-1} > r_{i+1,j-1}.
inline affine_permutation perm_of_r(const cyclic_rank_matrix& r) {
  const auto report = check_axioms(r);
  for (const auto& c : report.checks) {
    if (c.satisfied) continue;
    const auto [i, j] = c.witnesses.front();
    throw error(errc::axiom_violation, c.axiom + " fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  const index_t n = r.n();
  std::vector<index_t> window;
  for (index_t i = 1; i <= n; ++i) {
    std::optional<index_t> hit;
    for (index_t j = i; j <= i + n && !hit; ++j) {
      const index_t v = r.r(i, j);
      if (v == r.r(i + 1, j) && v == r.r(i, j - 1) && v > r.r(i + 1, j - 1)) hit = j;
    }
    if (!hit) throw error(errc::no_pivot, "no j in [i, i+n] for i=" + std::to_string(i));
    window.push_back(*hit);
  }
  return {static_cast<int>(n), std::move(window)};
}

namespace detail {

/// 0-based column indices of v_lo, ..., v_hi read cyclically.
inline std::vector<std::size_t> cyclic_columns(index_t lo, index_t hi, index_t n) {
  std::vector<std::size_t> cols;
  for (index_t t = lo; t <= hi; ++t) cols.push_back(static_cast<std::size_t>(floor_mod(t - 1, n)));
  return cols;
}

}  // namespace detail

/// f_M(i) = min { j >= i : v_i in span(v_{i+1}, ..., v_j) }. A zero column
/// gives f(i) = i.
inline affine_permutation f_of_matrix(const grassmann_point& point) {
  const auto cleared = clear_denominators(point.entries());
  const index_t n = point.n();
  std::vector<index_t> window;
  for (index_t i = 1; i <= n; ++i) {
    std::optional<index_t> hit;
    for (index_t j = i; j <= i + n && !hit; ++j) {
      const auto with = detail::cyclic_columns(i, j, n);
      const auto without = detail::cyclic_columns(i + 1, j, n);
      if (column_rank(cleared, with) == column_rank(cleared, without)) hit = j;
    }
    // j = i + n always succeeds since v_{i+n} = v_i.
    window.push_back(*hit);
  }
  return {static_cast<int>(n), std::move(window)};
}

/// r_ij(M) = dim span(v_i, ..., v_j), stored on the band.
inline cyclic_rank_matrix r_of_matrix(const grassmann_point& point) {
  const auto cleared = clear_denominators(point.entries());
  const index_t n = point.n();
  std::vector<std::vector<index_t>> band(static_cast<std::size_t>(n));
  for (index_t i = 1; i <= n; ++i) {
    for (index_t j = i - 1; j <= i + n - 1; ++j) {
      const auto r = static_cast<index_t>(column_rank(cleared, detail::cyclic_columns(i, j, n)));
      band[static_cast<std::size_t>(i - 1)].push_back(j - i + 1 - r);
    }
  }
  return {point.n(), point.k(), std::move(band)};
}

}  // namespace positroid
