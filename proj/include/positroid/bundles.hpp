#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "positroid/affperm.hpp"
#include "positroid/error.hpp"
#include "positroid/periodic_matrix.hpp"
#include "positroid/rational.hpp"

namespace positroid {

using degree_vector = std::vector<index_t>;

/// d rotated left by `steps` positions.
inline degree_vector rotate_left(const degree_vector& d, index_t steps) {
  degree_vector out(d.size());
  if (d.empty()) return out;
  const auto len = static_cast<index_t>(d.size());
  for (index_t t = 0; t < len; ++t) out[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(floor_mod(t + steps, len))];
  return out;
}

/// tau^m d for a vector over r n positions: rotation by m n.
inline degree_vector tau(const degree_vector& d, int n, index_t m = 1) { return rotate_left(d, m * n); }

/// An indecomposable summand of multiplicity one. `lambda` is the continuous
/// parameter; nullopt marks it as symbolic and distinct from every other.
struct summand {
  int rank = 1;
  degree_vector degrees;
  std::optional<rational> lambda;

  friend bool operator==(const summand&, const summand&) = default;
};

namespace detail {

/// d is tau^m-invariant for some 0 < m < rank.
inline bool is_tau_periodic(const summand& s, int n) {
  for (int m = 1; m < s.rank; ++m)
    if (s.rank % m == 0 && tau(s.degrees, n, m) == s.degrees) return true;
  return false;
}

inline bool tau_equivalent(const summand& a, const summand& b, int n) {
  if (a.rank != b.rank) return false;
  for (int m = 0; m < a.rank; ++m)
    if (tau(b.degrees, n, m) == a.degrees) return true;
  return false;
}

}  // namespace detail

/// A direct sum of pairwise non-isomorphic indecomposables on the n-cycle.
class bundle_type {
 public:
  bundle_type(int n, std::vector<summand> summands) : n_(n), summands_(std::move(summands)) {
    if (n_ <= 0) throw error(errc::invalid_parameters, "n must be positive");
    if (summands_.empty()) throw error(errc::invalid_summand, "no summands");
    for (std::size_t s = 0; s < summands_.size(); ++s) {
      const auto& x = summands_[s];
      const std::string where = "summand " + std::to_string(s);
      if (x.rank < 1) throw error(errc::invalid_summand, where + ": rank must be positive");
      if (x.degrees.size() != static_cast<std::size_t>(x.rank) * static_cast<std::size_t>(n_))
        throw error(errc::invalid_summand, where + ": degree vector length must be rank * n");
      if (detail::is_tau_periodic(x, n_)) throw error(errc::invalid_summand, where + ": degree vector is periodic");
    }
    for (std::size_t a = 0; a < summands_.size(); ++a)
      for (std::size_t b = a + 1; b < summands_.size(); ++b) {
        const auto& x = summands_[a];
        const auto& y = summands_[b];
        if (x.lambda && y.lambda && *x.lambda == *y.lambda && detail::tau_equivalent(x, y, n_))
          throw error(errc::invalid_summand,
                      "summands " + std::to_string(a) + " and " + std::to_string(b) + " are isomorphic");
      }
  }

  int n() const noexcept { return n_; }
  const std::vector<summand>& summands() const noexcept { return summands_; }

  int total_rank() const {
    return std::accumulate(summands_.begin(), summands_.end(), 0, [](int t, const summand& s) { return t + s.rank; });
  }

  friend bool operator==(const bundle_type&, const bundle_type&) = default;

 private:
  int n_;
  std::vector<summand> summands_;
};

/// Stacks d, tau d, ..., tau^{r-1} d for every summand, each repeated to the
/// common width H n with H the lcm of the ranks.
inline binary_periodic_matrix A_of_bundle(const bundle_type& b) {
  const int n = b.n();
  index_t h = 1;
  for (const auto& s : b.summands()) h = lcm_index(h, s.rank);
  const auto width = static_cast<std::size_t>(h * n);
  std::vector<binary_row> rows;
  for (const auto& s : b.summands()) {
    for (int m = 0; m < s.rank; ++m) {
      const auto d = tau(s.degrees, n, m);
      binary_row row(width);
      for (std::size_t c = 0; c < width; ++c) {
        const index_t v = d[c % d.size()];
        if (v != 0 && v != 1) throw error(errc::invalid_summand, "degree entries must be 0 or 1");
        row[c] = static_cast<std::uint8_t>(v);
      }
      rows.push_back(std::move(row));
    }
  }
  return binary_periodic_matrix(n, std::move(rows)).canonical();
}

/// f_A(i) = min { j >= i : v_j = v_{i-1} }.
inline affine_permutation f_of_A(const binary_periodic_matrix& a) {
  if (!a.has_standard_basis_columns()) throw error(errc::invalid_columns, "some column is not a standard basis vector");
  if (!a.has_nonzero_rows()) throw error(errc::invalid_columns, "zero row");
  const auto width = static_cast<index_t>(a.width());
  const auto f = [&](index_t i) {
    const auto target = *a.column_support(i - 1);
    index_t j = i;
    while (*a.column_support(j) != target) ++j;
    return j;
  };
  const int n = a.n();
  std::vector<index_t> window;
  for (index_t i = 1; i <= n; ++i) window.push_back(f(i));
  for (index_t i = 1; i <= width; ++i)
    if (f(i + n) != f(i) + n)
      throw error(errc::invalid_columns, "f_A(i + n) != f_A(i) + n at i=" + std::to_string(i));
  try {
    return {n, std::move(window)};
  } catch (const error& e) {
    throw error(errc::invalid_columns, e.what());
  }
}

/// One summand per orbit class of f o s_+: rank = period, degrees = the
/// characteristic block of the class member with the smallest rep.
inline bundle_type bundle_of_perm(const affine_permutation& f) {
  const auto structure = shifted_orbits(f);
  std::vector<summand> out;
  for (const auto& cls : structure.classes) {
    const auto& o = structure.orbits[cls.front()];
    out.push_back({o.period, degree_vector(o.char_block.begin(), o.char_block.end()), std::nullopt});
  }
  return {f.n(), std::move(out)};
}

/// h^0 of the indecomposable with degree vector d, via maximal cyclic
/// nonnegative runs. `same_lambda` only matters when d = 0.
inline index_t theta(const degree_vector& d, bool same_lambda) {
  if (std::all_of(d.begin(), d.end(), [](index_t x) { return x == 0; })) return same_lambda ? 1 : 0;
  const auto negative = std::find_if(d.begin(), d.end(), [](index_t x) { return x < 0; });
  if (negative == d.end()) return std::accumulate(d.begin(), d.end(), index_t{0});
  const auto len = d.size();
  const auto start = static_cast<std::size_t>(negative - d.begin());
  index_t total = 0;
  index_t run = 0;
  bool open = false;
  for (std::size_t t = 1; t <= len; ++t) {
    const index_t x = d[(start + t) % len];
    if (x < 0) {
      if (open) total += std::max<index_t>(run - 1, 0);
      run = 0;
      open = false;
    } else {
      run += x;
      open = true;
    }
  }
  return total;
}

/// dim Hom(s1, s2). `same_parameter` says the two summands carry the same
/// continuous parameter; pass true for a summand against itself.
inline index_t hom_dim(const summand& s1, const summand& s2, int n, bool same_parameter) {
  if (s1.degrees.size() != static_cast<std::size_t>(s1.rank) * static_cast<std::size_t>(n) ||
      s2.degrees.size() != static_cast<std::size_t>(s2.rank) * static_cast<std::size_t>(n))
    throw error(errc::mismatched_n, "degree vector lengths do not match n=" + std::to_string(n));
  const index_t h = lcm_index(s1.rank, s2.rank);
  const index_t g = gcd_index(s1.rank, s2.rank);
  const auto len = static_cast<std::size_t>(h * n);
  degree_vector d1(len), d2(len);
  for (std::size_t t = 0; t < len; ++t) {
    d1[t] = s1.degrees[t % s1.degrees.size()];
    d2[t] = s2.degrees[t % s2.degrees.size()];
  }
  index_t total = 0;
  for (index_t l = 0; l < g; ++l) {
    auto diff = tau(d2, n, l);
    for (std::size_t t = 0; t < len; ++t) diff[t] -= d1[t];
    total += theta(diff, same_parameter);
  }
  return total;
}

/// Convenience overload for summands of the same bundle: the parameters agree
/// when both are explicit and equal, or when the summands are identical.
inline index_t hom_dim(const summand& s1, const summand& s2, int n) {
  const bool same = s1 == s2 || (s1.lambda && s2.lambda && *s1.lambda == *s2.lambda);
  return hom_dim(s1, s2, n, same);
}

inline index_t end_dim(const bundle_type& b) {
  const auto& s = b.summands();
  index_t total = 0;
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t v = 0; v < s.size(); ++v) {
      const bool same = u == v || (s[u].lambda && s[v].lambda && *s[u].lambda == *s[v].lambda);
      total += hom_dim(s[u], s[v], b.n(), same);
    }
  return total;
}

struct membership_flags {
  bool in_u_plus = false;
  bool in_u_plus_plus = false;
};

inline membership_flags membership(const bundle_type& b) {
  membership_flags out;
  for (const auto& s : b.summands()) {
    const bool binary = std::all_of(s.degrees.begin(), s.degrees.end(), [](index_t x) { return x == 0 || x == 1; });
    const bool nonzero = std::find(s.degrees.begin(), s.degrees.end(), 1) != s.degrees.end();
    if (!binary || !nonzero) return out;
  }
  const auto a = A_of_bundle(b);
  if (!a.has_standard_basis_columns()) return out;
  out.in_u_plus = true;
  try {
    out.in_u_plus_plus = classify(f_of_A(a)).bounded;
  } catch (const error&) {
    out.in_u_plus_plus = false;
  }
  return out;
}

}  // namespace positroid
