#pragma once

#include <map>
#include <set>
#include <vector>

#include "positroid/affperm.hpp"
#include "positroid/rankmat.hpp"

namespace positroid {

namespace detail {

inline void require_same_type(const affine_permutation& f, const affine_permutation& g) {
  if (f.n() != g.n() || f.k() != g.k())
    throw error(errc::mismatched_parameters, "(n,k) = (" + std::to_string(f.n()) + "," + std::to_string(f.k()) +
                                                 ") vs (" + std::to_string(g.n()) + "," + std::to_string(g.k()) + ")");
}

}  // namespace detail

/// Swaps the values at i + tn and j + tn for every t. Requires i < j,
/// i != j mod n and f(i) > f(j).
inline affine_permutation swap_values(const affine_permutation& f, index_t i, index_t j) {
  const index_t n = f.n();
  if (!(i < j) || floor_mod(j - i, n) == 0 || !(f(i) > f(j)))
    throw error(errc::not_an_inversion, "(" + std::to_string(i) + "," + std::to_string(j) + ") is not an inversion");
  auto w = f.window();
  const index_t i0 = floor_mod(i - 1, n) + 1;
  const index_t j0 = floor_mod(j - 1, n) + 1;
  w[static_cast<std::size_t>(i0 - 1)] = f(j) - (i - i0);
  w[static_cast<std::size_t>(j0 - 1)] = f(i) - (j - j0);
  return {f.n(), std::move(w)};
}

/// Every permutation reachable from plus f by one inversion swap. Plus is
/// preserved, and f(j) >= j bounds the partner index by j < f(i).
inline std::vector<affine_permutation> inversion_swaps(const affine_permutation& f) {
  require_plus(f);
  std::set<affine_permutation> out;
  for (index_t i = 1; i <= f.n(); ++i)
    for (index_t j = i + 1; j < f(i); ++j)
      if (floor_mod(j - i, f.n()) != 0 && f(i) > f(j)) out.insert(swap_values(f, i, j));
  return {out.begin(), out.end()};
}

/// r(f) >= r(g) entrywise; by the rank-matrix criterion this is f <= g in
/// Bruhat order. Closed forms off the band agree for equal (n, k).
inline bool bruhat_leq(const affine_permutation& f, const affine_permutation& g) {
  detail::require_same_type(f, g);
  const auto rf = r_of_perm(f);
  const auto rg = r_of_perm(g);
  for (index_t i = 1; i <= f.n(); ++i)
    for (index_t j = i - 1; j <= i + f.n() - 1; ++j)
      if (rf.r(i, j) < rg.r(i, j)) return false;
  return true;
}

/// The order generated by inversion swaps, with memoized down-sets. Meant
/// for enumeration-scale sets (n <= 5).
class swap_order {
 public:
  /// Everything reachable from f by zero or more swaps.
  const std::set<affine_permutation>& below(const affine_permutation& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::set<affine_permutation> down{f};
    for (const auto& g : inversion_swaps(f)) {
      const auto& sub = below(g);
      down.insert(sub.begin(), sub.end());
    }
    return memo_.emplace(f, std::move(down)).first->second;
  }

  bool leq(const affine_permutation& g, const affine_permutation& f) { return below(f).contains(g); }

  /// g is one swap below f with nothing strictly in between.
  bool covers(const affine_permutation& f, const affine_permutation& g) {
    detail::require_same_type(f, g);
    if (f == g) return false;
    const auto steps = inversion_swaps(f);
    if (std::find(steps.begin(), steps.end(), g) == steps.end()) return false;
    for (const auto& h : steps)
      if (h != g && below(h).contains(g)) return false;
    return true;
  }

 private:
  std::map<affine_permutation, std::set<affine_permutation>> memo_;
};

inline bool covers(const affine_permutation& f, const affine_permutation& g) {
  swap_order order;
  return order.covers(f, g);
}

}  // namespace positroid
