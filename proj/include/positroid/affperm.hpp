#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/periodic_matrix.hpp"
#include "positroid/rational.hpp"

namespace positroid {

/// A bijection f of the integers with f(i + n) = f(i) + n, stored as its
/// window [f(1), ..., f(n)]. The ball number k = sum(f(i) - i) / n.
class affine_permutation {
 public:
  affine_permutation(int n, std::vector<index_t> window) : n_(n), window_(std::move(window)) {
    if (n_ <= 0) throw error(errc::invalid_parameters, "period must be positive");
    if (window_.size() != static_cast<std::size_t>(n_))
      throw error(errc::invalid_parameters,
                  "window has " + std::to_string(window_.size()) + " entries, expected " + std::to_string(n_));
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    index_t displacement = 0;
    for (index_t i = 1; i <= n_; ++i) {
      const index_t v = window_[static_cast<std::size_t>(i - 1)];
      const auto res = static_cast<std::size_t>(floor_mod(v, n_));
      if (seen[res])
        throw error(errc::duplicate_residue, "value " + std::to_string(v) + " repeats residue " + std::to_string(res));
      seen[res] = true;
      displacement += v - i;
    }
    if (floor_mod(displacement, n_) != 0)
      throw error(errc::non_integral_ball_number,
                  "sum of displacements " + std::to_string(displacement) + " not divisible by " + std::to_string(n_));
    k_ = static_cast<int>(displacement / n_);
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<index_t>& window() const noexcept { return window_; }

  index_t operator()(index_t m) const noexcept {
    return window_[static_cast<std::size_t>(floor_mod(m - 1, n_))] + n_ * floor_div(m - 1, n_);
  }

  friend bool operator==(const affine_permutation& a, const affine_permutation& b) {
    return a.n_ == b.n_ && a.window_ == b.window_;
  }
  friend auto operator<=>(const affine_permutation& a, const affine_permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.window_ <=> b.window_;
  }

 private:
  int n_;
  int k_ = 0;
  std::vector<index_t> window_;
};

/// s_+^k, the window [1 + k, ..., n + k].
inline affine_permutation shift_power(int n, int k) {
  std::vector<index_t> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), index_t{1} + k);
  return {n, std::move(w)};
}

struct permutation_class {
  int k;
  bool bounded;
  bool plus;
  bool strict_plus;
};

inline permutation_class classify(const affine_permutation& f) {
  permutation_class c{f.k(), true, true, true};
  for (index_t i = 1; i <= f.n(); ++i) {
    const index_t v = f(i);
    c.bounded = c.bounded && i <= v && v <= i + f.n();
    c.plus = c.plus && v >= i;
    c.strict_plus = c.strict_plus && v > i;
  }
  return c;
}

inline void require_plus(const affine_permutation& f) {
  if (!classify(f).plus) throw error(errc::not_plus, "some f(i) < i");
}

/// Number of pairs (i, j) with 1 <= i <= n, i < j and f(i) > f(j).
/// For plus f, f(i) <= i + kn and f(j) >= j, so j <= i + (k+1)n is enough.
inline index_t length(const affine_permutation& f) {
  require_plus(f);
  const index_t n = f.n();
  const index_t reach = (f.k() + 1) * n;
  index_t count = 0;
  for (index_t i = 1; i <= n; ++i)
    for (index_t j = i + 1; j <= i + reach; ++j)
      if (f(i) > f(j)) ++count;
  return count;
}

/// f o s_+^m, i.e. the window g(i) = f(i + m).
inline affine_permutation compose_splus(const affine_permutation& f, index_t m) {
  std::vector<index_t> w(static_cast<std::size_t>(f.n()));
  for (index_t i = 1; i <= f.n(); ++i) w[static_cast<std::size_t>(i - 1)] = f(i + m);
  return {f.n(), std::move(w)};
}

/// One orbit of the cyclic group generated by a strictly increasing-step g.
/// The orbit is invariant under translation by period * n, and
/// members_in_block lists its elements in [1, period * n].
struct orbit {
  index_t rep = 0;
  int period = 0;
  int cycle_length = 0;
  std::vector<index_t> members_in_block;
  binary_row char_block;

  index_t block_length(int n) const noexcept { return static_cast<index_t>(period) * n; }

  bool contains(index_t m) const {
    const index_t len = static_cast<index_t>(char_block.size());
    return char_block[static_cast<std::size_t>(floor_mod(m - 1, len))] != 0;
  }
};

struct orbit_structure {
  int n = 0;
  std::vector<orbit> orbits;
  // Indices into `orbits`; orbits in one class differ by a shift of n.
  std::vector<std::vector<std::size_t>> classes;
  int p = 0;
};

namespace detail {

inline orbit trace_orbit(const affine_permutation& g, index_t start) {
  const index_t n = g.n();
  std::vector<index_t> members{start};
  index_t x = g(start);
  while (floor_mod(x - start, n) != 0) {
    members.push_back(x);
    x = g(x);
  }
  orbit o;
  o.period = static_cast<int>((x - start) / n);
  o.cycle_length = static_cast<int>(members.size());
  const index_t len = o.block_length(static_cast<int>(n));
  o.char_block.assign(static_cast<std::size_t>(len), 0);
  for (index_t m : members) {
    const index_t reduced = floor_mod(m - 1, len) + 1;
    o.members_in_block.push_back(reduced);
    o.char_block[static_cast<std::size_t>(reduced - 1)] = 1;
  }
  std::sort(o.members_in_block.begin(), o.members_in_block.end());
  o.rep = o.members_in_block.front();
  return o;
}

}  // namespace detail

/// Orbits of Z acting on the integers through g, grouped into classes under
/// translation by n. Requires g(i) > i for all i.
inline orbit_structure orbit_decomposition(const affine_permutation& g) {
  if (!classify(g).strict_plus) throw error(errc::not_strict_plus, "some g(i) <= i");
  const int n = g.n();
  orbit_structure out;
  out.n = n;
  // Orbits partition Z, so their densities cycle_length / (period * n) sum to 1.
  rational covered = 0;
  for (index_t start = 1; covered < 1; ++start) {
    const bool known = std::any_of(out.orbits.begin(), out.orbits.end(),
                                   [&](const orbit& o) { return o.contains(start); });
    if (known) continue;
    auto o = detail::trace_orbit(g, start);
    covered += rational(o.cycle_length, o.block_length(n));
    out.orbits.push_back(std::move(o));
  }
  std::sort(out.orbits.begin(), out.orbits.end(), [](const orbit& a, const orbit& b) { return a.rep < b.rep; });

  std::vector<bool> assigned(out.orbits.size(), false);
  for (std::size_t a = 0; a < out.orbits.size(); ++a) {
    if (assigned[a]) continue;
    std::vector<std::size_t> cls{a};
    assigned[a] = true;
    const auto& base = out.orbits[a];
    for (std::size_t b = a + 1; b < out.orbits.size(); ++b) {
      if (assigned[b] || out.orbits[b].period != base.period) continue;
      for (int d = 1; d < base.period; ++d) {
        if (out.orbits[b].contains(base.rep + static_cast<index_t>(d) * n)) {
          cls.push_back(b);
          assigned[b] = true;
          break;
        }
      }
    }
    out.classes.push_back(std::move(cls));
  }
  out.p = static_cast<int>(out.classes.size());
  return out;
}

/// Orbit decomposition of f o s_+ for plus f; p(f) is its class count.
inline orbit_structure shifted_orbits(const affine_permutation& f) {
  require_plus(f);
  return orbit_decomposition(compose_splus(f, 1));
}

inline int summand_count(const affine_permutation& f) { return shifted_orbits(f).p; }

/// The characteristic matrix A_{f o s_+}: one row per orbit over a block of
/// width H n, H the lcm of the orbit periods, rows in canonical order.
inline binary_periodic_matrix characteristic_matrix(const affine_permutation& f) {
  const auto structure = shifted_orbits(f);
  index_t h = 1;
  for (const auto& o : structure.orbits) h = lcm_index(h, o.period);
  const index_t width = h * f.n();
  std::vector<binary_row> rows;
  for (const auto& o : structure.orbits) {
    binary_row row(static_cast<std::size_t>(width));
    for (index_t c = 1; c <= width; ++c) row[static_cast<std::size_t>(c - 1)] = o.contains(c) ? 1 : 0;
    rows.push_back(std::move(row));
  }
  return binary_periodic_matrix(f.n(), std::move(rows)).canonical();
}

enum class perm_family { bounded, plus };

struct enumeration_limits {
  int n_max = 6;
};

/// All of B(k,n) or of the plus class with ball number k, in lexicographic
/// window order.
inline std::vector<affine_permutation> enumerate(int n, int k, perm_family family, enumeration_limits limits = {}) {
  if (n > limits.n_max)
    throw error(errc::limit_exceeded, "n=" + std::to_string(n) + " exceeds n_max=" + std::to_string(limits.n_max));
  if (!(0 < k && k < n))
    throw error(errc::invalid_parameters, "need 0 < k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));

  std::vector<affine_permutation> out;
  std::vector<index_t> window;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  const index_t total = static_cast<index_t>(k) * n;

  auto recurse = [&](auto& self, index_t i, index_t remaining) -> void {
    if (i > n) {
      if (remaining == 0) out.emplace_back(n, window);
      return;
    }
    index_t hi = i + remaining;
    if (family == perm_family::bounded) hi = std::min<index_t>(hi, i + n);
    for (index_t v = i; v <= hi; ++v) {
      const auto res = static_cast<std::size_t>(floor_mod(v, n));
      if (used[res]) continue;
      used[res] = true;
      window.push_back(v);
      self(self, i + 1, remaining - (v - i));
      window.pop_back();
      used[res] = false;
    }
  };
  recurse(recurse, 1, total);
  return out;
}

}  // namespace positroid
