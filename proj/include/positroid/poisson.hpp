#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "positroid/affperm.hpp"
#include "positroid/error.hpp"
#include "positroid/linalg.hpp"
#include "positroid/polynomial.hpp"
#include "positroid/rankmat.hpp"

namespace positroid {

/// Basis of the annihilator of the row span, from the reduced echelon form:
/// one vector per non-pivot column, in column order.
inline std::vector<rational_vector> kernel_basis(const grassmann_point& point) { return nullspace(point.entries()); }

/// sum_{i<j} (a_i b_j - b_i a_j) lam_i mu_j, defined when a and b are both
/// orthogonal to lam and mu.
inline rational mp_pairing(const rational_vector& a, const rational_vector& lam, const rational_vector& b,
                           const rational_vector& mu) {
  const std::size_t n = a.size();
  if (lam.size() != n || b.size() != n || mu.size() != n)
    throw error(errc::invalid_parameters, "mp_pairing arguments differ in length");
  const std::pair<std::string_view, rational> pairings[] = {
      {"a.lam", dot(a, lam)}, {"b.lam", dot(b, lam)}, {"a.mu", dot(a, mu)}, {"b.mu", dot(b, mu)}};
  for (const auto& [name, value] : pairings)
    if (value != 0) throw error(errc::orthogonality_violation, std::string(name) + " = " + to_string(value));
  rational sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += (a[i] * b[j] - b[i] * a[j]) * lam[i] * mu[j];
  return sum;
}

/// A polylinear map B(c, x, c', y) on four n-vectors.
using polylinear = std::function<rational(const rational_vector&, const rational_vector&, const rational_vector&,
                                          const rational_vector&)>;

/// The twisted standard form: sum over j != l of
/// sgn(l - j) (c_j x_j c'_l y_l - c_l x_j c'_j y_l).
inline rational b_prime_st(const rational_vector& c, const rational_vector& x, const rational_vector& cp,
                           const rational_vector& y) {
  const std::size_t n = c.size();
  rational sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t l = 0; l < n; ++l) {
      if (j == l || y[l] == 0) continue;
      const rational term = x[j] * y[l] * (c[j] * cp[l] - c[l] * cp[j]);
      if (j < l)
        sum += term;
      else
        sum -= term;
    }
  }
  return sum;
}

/// The Cartan term sum_{i<j} chi(E_ii) ^ chi(E_jj) as a form:
/// sum over q != s of sgn(q - s) c_s x_q c'_q y_s.
inline rational cartan_b(const rational_vector& c, const rational_vector& x, const rational_vector& cp,
                         const rational_vector& y) {
  const std::size_t n = c.size();
  rational sum = 0;
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t s = 0; s < n; ++s) {
      if (q == s) continue;
      const rational term = c[s] * x[q] * cp[q] * y[s];
      if (q > s)
        sum += term;
      else
        sum -= term;
    }
  return sum;
}

enum class bivector_method { chi_standard, chi_twisted, b_prime_st, fo_massey };

inline std::string_view to_string(bivector_method m) {
  switch (m) {
    case bivector_method::chi_standard: return "chi_standard";
    case bivector_method::chi_twisted: return "chi_twisted";
    case bivector_method::b_prime_st: return "b_prime_st";
    case bivector_method::fo_massey: return "fo_massey";
  }
  return "?";
}

struct cotangent_vector {
  std::size_t row;  // 0-based a
  rational_vector complement;
};

/// A skew matrix in the cotangent basis e_a (x) c, a-major.
struct skew_form {
  int k = 0;
  int n = 0;
  std::vector<cotangent_vector> basis;
  rational_matrix values;
};

inline std::vector<cotangent_vector> cotangent_basis(const grassmann_point& point,
                                                     const std::vector<rational_vector>& complements) {
  std::vector<cotangent_vector> basis;
  for (std::size_t a = 0; a < static_cast<std::size_t>(point.k()); ++a)
    for (const auto& c : complements) basis.push_back({a, c});
  return basis;
}

/// entry((a,c),(a',c')) = B(c, M_a', c', M_a).
inline skew_form induced_form(const grassmann_point& point, const std::vector<rational_vector>& complements,
                              const polylinear& b) {
  skew_form s{point.k(), point.n(), cotangent_basis(point, complements), {}};
  const std::size_t dim = s.basis.size();
  s.values = rational_matrix(dim, dim);
  std::vector<rational_vector> rows;
  for (std::size_t a = 0; a < static_cast<std::size_t>(point.k()); ++a) rows.push_back(point.row_vector(a));
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v) {
      const auto& [a, c] = s.basis[u];
      const auto& [ap, cp] = s.basis[v];
      s.values(u, v) = b(c, rows[ap], cp, rows[a]);
    }
  return s;
}

/// Sum over the pairs (A, B) of <c, A x><c', B y> - <c, B x><c', A y> with
/// x = M_a, y = M_a'. Standard pairs are (E_ij, E_ji), i < j; the twist adds
/// (E_ii, E_jj), i < j.
inline skew_form chi_form(const grassmann_point& point, const std::vector<rational_vector>& complements,
                          bool twisted) {
  skew_form s{point.k(), point.n(), cotangent_basis(point, complements), {}};
  const std::size_t dim = s.basis.size();
  const auto n = static_cast<std::size_t>(point.n());
  s.values = rational_matrix(dim, dim);
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v) {
      const auto& [a, c] = s.basis[u];
      const auto& [ap, cp] = s.basis[v];
      const auto x = point.entries().row(a);
      const auto y = point.entries().row(ap);
      rational sum = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          // <c, E_ij x> = c_i x_j
          sum += c[i] * x[j] * cp[j] * y[i] - c[j] * x[i] * cp[i] * y[j];
          if (twisted) sum += c[i] * x[i] * cp[j] * y[j] - c[j] * x[j] * cp[i] * y[i];
        }
      s.values(u, v) = sum;
    }
  return s;
}

inline skew_form bivector(const grassmann_point& point, bivector_method method,
                          const std::vector<rational_vector>& complements) {
  switch (method) {
    case bivector_method::chi_standard: return chi_form(point, complements, false);
    case bivector_method::chi_twisted: return chi_form(point, complements, true);
    case bivector_method::b_prime_st: return induced_form(point, complements, b_prime_st);
    case bivector_method::fo_massey: return induced_form(point, complements, mp_pairing);
  }
  throw error(errc::invalid_parameters, "unknown bivector method");
}

inline skew_form bivector(const grassmann_point& point, bivector_method method) {
  return bivector(point, method, kernel_basis(point));
}

inline std::size_t skew_rank(const skew_form& s) { return s.values.rows() == 0 ? 0 : rank(s.values); }

struct leaf_report {
  affine_permutation f;
  index_t ell = 0;
  int p = 0;
  index_t dim_X_f = 0;
  index_t predicted_leaf_dim = 0;
  index_t bivector_rank = 0;
  bool consistent = false;
};

/// Compares the rank of the twisted bivector with k(n-k) - ell(f) - (p(f) - 1).
inline leaf_report make_leaf_report(const grassmann_point& point) {
  auto f = f_of_matrix(point);
  const index_t ell = length(f);
  const int p = summand_count(f);
  const index_t dim = static_cast<index_t>(point.k()) * (point.n() - point.k()) - ell;
  const index_t predicted = dim - (p - 1);
  const auto r = static_cast<index_t>(skew_rank(bivector(point, bivector_method::chi_twisted)));
  return {std::move(f), ell, p, dim, predicted, r, r == predicted};
}

/// Columns rotated left by one: v'_i = v_{i+1}.
inline rational_matrix rotate_columns(const rational_matrix& m) {
  rational_matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, (c + 1) % m.cols());
  return out;
}

/// Whether rotating both M and its kernel basis carries the form at M to the
/// form at the rotated point entry for entry.
inline bool rotation_intertwines(const grassmann_point& point, bivector_method method) {
  const auto complements = kernel_basis(point);
  std::vector<rational_vector> rotated;
  for (const auto& c : complements) {
    rational_vector r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[(i + 1) % c.size()];
    rotated.push_back(std::move(r));
  }
  const grassmann_point moved(rotate_columns(point.entries()));
  return bivector(point, method, complements).values == bivector(moved, method, rotated).values;
}

// Chart realization on { [I_k | Z] }.

/// A skew array of polynomials in the k(n-k) chart variables z_{a m},
/// variable index a (n - k) + m.
struct poly_bivector {
  int k = 0;
  int n = 0;
  std::vector<std::vector<polynomial>> coeffs;

  std::size_t dim() const noexcept { return coeffs.size(); }
};

struct chart_limits {
  std::size_t max_vars = 9;
};

namespace detail {

/// Components of chi(E_ij) on the chart: dZ = B' - A' Z with [A' | B'] = M E_ij^T,
/// whose column i is column j of M and whose other columns vanish.
inline std::vector<polynomial> chart_field(int k, int n, int i, int j) {
  const auto vars = static_cast<std::size_t>(k * (n - k));
  const auto z = [&](int a, int m) { return polynomial::variable(vars, static_cast<std::size_t>(a * (n - k) + m)); };
  // Entry (a, col) of M = [I | Z].
  const auto entry = [&](int a, int col) {
    if (col < k) return polynomial::constant(vars, a == col ? 1 : 0);
    return z(a, col - k);
  };
  std::vector<polynomial> field(vars, polynomial(vars));
  for (int a = 0; a < k; ++a)
    for (int m = 0; m < n - k; ++m) {
      auto& out = field[static_cast<std::size_t>(a * (n - k) + m)];
      if (k + m == i) out += entry(a, j);
      if (i < k) out -= entry(a, j) * z(i, m);
    }
  return field;
}

}  // namespace detail

/// P^{uv} = sum over pairs (A, B) of X_A^u X_B^v - X_B^u X_A^v.
inline poly_bivector chart_bivector(int k, int n, bool twisted, chart_limits limits = {}) {
  if (!(0 < k && k < n))
    throw error(errc::invalid_parameters, "need 0 < k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  const auto vars = static_cast<std::size_t>(k * (n - k));
  if (vars > limits.max_vars)
    throw error(errc::limit_exceeded,
                std::to_string(vars) + " chart variables exceed the limit of " + std::to_string(limits.max_vars));
  poly_bivector out{k, n, std::vector<std::vector<polynomial>>(vars, std::vector<polynomial>(vars, polynomial(vars)))};
  auto add_pair = [&](const std::vector<polynomial>& xa, const std::vector<polynomial>& xb) {
    for (std::size_t u = 0; u < vars; ++u)
      for (std::size_t v = 0; v < vars; ++v) out.coeffs[u][v] += xa[u] * xb[v] - xb[u] * xa[v];
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      add_pair(detail::chart_field(k, n, i, j), detail::chart_field(k, n, j, i));
      if (twisted) add_pair(detail::chart_field(k, n, i, i), detail::chart_field(k, n, j, j));
    }
  return out;
}

/// J^{abc} = sum_d P^{da} d_d P^{bc} + P^{db} d_d P^{ca} + P^{dc} d_d P^{ab}.
struct trivector {
  std::size_t dim = 0;
  std::vector<polynomial> entries;

  const polynomial& at(std::size_t a, std::size_t b, std::size_t c) const { return entries[(a * dim + b) * dim + c]; }

  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const polynomial& p) { return p.is_zero(); });
  }
};

inline trivector schouten_jacobiator(const poly_bivector& p) {
  const std::size_t dim = p.dim();
  const std::size_t vars = dim;
  std::vector<std::vector<std::vector<polynomial>>> grad(dim, std::vector<std::vector<polynomial>>(dim));
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t c = 0; c < dim; ++c)
      for (std::size_t d = 0; d < vars; ++d) grad[b][c].push_back(p.coeffs[b][c].derivative(d));
  trivector out{dim, {}};
  out.entries.reserve(dim * dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        polynomial sum(vars);
        for (std::size_t d = 0; d < vars; ++d) {
          sum += p.coeffs[d][a] * grad[b][c][d];
          sum += p.coeffs[d][b] * grad[c][a][d];
          sum += p.coeffs[d][c] * grad[a][b][d];
        }
        out.entries.push_back(std::move(sum));
      }
  return out;
}

struct chart_point {
  rational_matrix g;  // first k columns of M
  rational_vector z;  // G^{-1} times the remaining columns, row-major
};

/// Writes M = G [I | Z]. Throws RankDeficient when the first k columns are
/// dependent, since M then lies outside the chart.
inline chart_point chart_coordinates(const grassmann_point& point) {
  const auto k = static_cast<std::size_t>(point.k());
  const auto n = static_cast<std::size_t>(point.n());
  const auto& m = point.entries();
  chart_point out{rational_matrix(k, k), rational_vector(k * (n - k))};
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) out.g(a, b) = m(a, b);
  const auto [red, pivots] = rref(m);
  if (pivots.size() < k || pivots[k - 1] != k - 1)
    throw error(errc::rank_deficient, "the first k columns are dependent; point is outside the chart");
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t t = 0; t < n - k; ++t) out.z[a * (n - k) + t] = red(a, k + t);
  return out;
}

/// The chart bivector at M, rewritten in the cotangent basis e_a (x) c.
/// e_a (x) c pulls back to sum_{b,m} G_ab c_{k+m} dz_bm, so S = T P T^T.
inline rational_matrix chart_to_cotangent(const poly_bivector& p, const grassmann_point& point,
                                          const std::vector<rational_vector>& complements) {
  if (p.k != point.k() || p.n != point.n()) throw error(errc::mismatched_parameters, "chart and point differ in (k,n)");
  const auto k = static_cast<std::size_t>(p.k);
  const auto width = static_cast<std::size_t>(p.n - p.k);
  const auto at = chart_coordinates(point);
  const auto basis = cotangent_basis(point, complements);
  rational_matrix t(basis.size(), p.dim());
  for (std::size_t u = 0; u < basis.size(); ++u) {
    const auto& [a, c] = basis[u];
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t m = 0; m < width; ++m) t(u, b * width + m) = at.g(a, b) * c[k + m];
  }
  rational_matrix values(p.dim(), p.dim());
  for (std::size_t u = 0; u < p.dim(); ++u)
    for (std::size_t v = 0; v < p.dim(); ++v) values(u, v) = p.coeffs[u][v].evaluate(at.z);
  return t * values * t.transpose();
}

}  // namespace positroid
