#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "positroid/verify.hpp"

using namespace positroid;

namespace {

struct criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<bool(std::string&)> run;
};

std::vector<std::pair<int, int>> shapes_up_to(int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k < n; ++k) out.emplace_back(k, n);
  return out;
}

std::set<binary_row> row_set(const std::vector<binary_row>& rows) { return {rows.begin(), rows.end()}; }

bool worked_examples(std::string& note) {
  struct expected {
    std::vector<index_t> window;
    index_t ell;
    int p;
    index_t end;
    bool bounded;
  };
  const std::vector<expected> cases{
      {{3, 4, 5, 6}, 0, 1, 1, true}, {{5, 3, 6, 4}, 3, 2, 5, true}, {{2, 3, 4, 9}, 3, 2, 5, false}};
  for (const auto& c : cases) {
    const affine_permutation f(4, c.window);
    const auto b = bundle_of_perm(f);
    if (length(f) != c.ell || summand_count(f) != c.p || end_dim(b) != c.end || classify(f).bounded != c.bounded) {
      note = "mismatch at window " + io::to_json(f).dump();
      return false;
    }
  }
  return true;
}

bool characteristic_matrices(std::string&) {
  const std::vector<std::pair<std::vector<index_t>, std::vector<binary_row>>> cases{
      {{3, 4, 5, 6},
       {{1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1}}},
      {{5, 3, 6, 4}, {{1, 0, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 1}, {0, 1, 0, 0, 0, 1, 0, 0}}},
      {{2, 3, 4, 9}, {{1, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1, 0, 1}}}};
  for (const auto& [window, rows] : cases)
    if (row_set(characteristic_matrix(affine_permutation(4, window)).rows()) != row_set(rows)) return false;
  return true;
}

/// Divides column c by c + 2 and row r by r + 3 so entries are proper fractions.
grassmann_point fractional(const grassmann_point& m) {
  auto e = m.entries();
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < e.cols(); ++c) e(r, c) /= rational(static_cast<int>((c + 2) * (r + 3)));
  return grassmann_point(std::move(e));
}

bool bracket_equality(std::string& note) {
  point_sampler sampler(33);
  std::size_t points = 0;
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}})
    for (int t = 0; t < 100; ++t) {
      const auto drawn = t % 2 ? sampler.degenerate(k, n) : sampler.generic(k, n);
      const auto m = t % 3 == 0 ? fractional(drawn) : drawn;
      const auto basis = kernel_basis(m);
      const auto chi = bivector(m, bivector_method::chi_twisted, basis).values;
      const auto bst = bivector(m, bivector_method::b_prime_st, basis).values;
      const auto fo = bivector(m, bivector_method::fo_massey, basis).values;
      for (std::size_t r = 0; r < chi.rows(); ++r)
        for (std::size_t c = 0; c < chi.cols(); ++c)
          if (chi(r, c) != bst(r, c) || chi(r, c) != 2 * fo(r, c)) {
            note = "at " + io::to_json(m.entries()).dump();
            return false;
          }
      ++points;
    }
  note = std::to_string(points) + " points";
  return true;
}

std::size_t chi_rank(const grassmann_point& m) { return skew_rank(bivector(m, bivector_method::chi_twisted)); }

bool leaf_ranks(std::string& note) {
  point_sampler sampler(4);
  const affine_permutation top(4, {3, 4, 5, 6});
  int found = 0;
  int skipped = 0;
  while (found < 20) {
    const auto m = sampler.generic(2, 4);
    if (f_of_matrix(m) != top) {
      ++skipped;
      continue;
    }
    if (chi_rank(m) != 4) return false;
    ++found;
  }
  note = "skipped " + std::to_string(skipped) + " draws off the open cell";
  return chi_rank(grassmann_point(rational_matrix{{1, 0, 0, 0}, {0, 1, 1, 0}})) == 0 &&
         chi_rank(grassmann_point(rational_matrix{{1, 1, 1}})) == 2;
}

bool rank_stratum(std::string& note) {
  point_sampler sampler(55);
  std::size_t points = 0;
  for (const auto& [k, n] : shapes_up_to(6))
    for (int t = 0; t < 40; ++t) {
      const auto m = t % 2 ? sampler.degenerate(k, n) : sampler.generic(k, n);
      const auto f = f_of_matrix(m);
      const index_t expected = static_cast<index_t>(k) * (n - k) - length(f) - (summand_count(f) - 1);
      if (static_cast<index_t>(chi_rank(m)) != expected) {
        note = "at " + io::to_json(m.entries()).dump();
        return false;
      }
      ++points;
    }
  note = std::to_string(points) + " points";
  return points >= 500;
}

bool round_trips(std::string& note) {
  std::size_t plus = 0;
  std::size_t bounded = 0;
  for (const auto& [k, n] : shapes_up_to(5)) {
    for (const auto& f : enumerate(n, k, perm_family::plus)) {
      ++plus;
      if (f_of_A(A_of_bundle(bundle_of_perm(f))) != f) return false;
    }
    for (const auto& f : enumerate(n, k, perm_family::bounded)) {
      ++bounded;
      const auto r = r_of_perm(f);
      if (!check_axioms(r).ok() || perm_of_r(r) != f) return false;
    }
  }
  note = std::to_string(plus) + " plus, " + std::to_string(bounded) + " bounded";
  return true;
}

bool end_identity(std::string&) {
  for (const auto& [k, n] : shapes_up_to(5))
    for (const auto& f : enumerate(n, k, perm_family::plus)) {
      const auto b = bundle_of_perm(f);
      if (length(f) != end_dim(b) - static_cast<index_t>(b.summands().size())) return false;
    }
  return true;
}

bool orbit_counts(std::string&) {
  for (const auto& [k, n] : shapes_up_to(5))
    for (const auto& f : enumerate(n, k, perm_family::plus))
      if (orbit_decomposition(compose_splus(f, 1)).orbits.size() != static_cast<std::size_t>(k + 1)) return false;
  return true;
}

bool bruhat(std::string& note) {
  std::size_t pairs = 0;
  for (const auto& [k, n] : shapes_up_to(4)) {
    const auto all = enumerate(n, k, perm_family::bounded);
    swap_order order;
    std::size_t minima = 0;
    for (const auto& f : all) {
      const auto& below = order.below(f);
      bool minimal = true;
      for (const auto& g : all) {
        ++pairs;
        if (below.contains(g) != bruhat_leq(g, f)) return false;
        if (g != f && bruhat_leq(g, f)) minimal = false;
      }
      if (minimal) {
        ++minima;
        if (f != shift_power(n, k)) return false;
      }
    }
    if (minima != 1) return false;
  }
  note = std::to_string(pairs) + " pairs";
  return true;
}

bool jacobi(std::string&) {
  for (const auto& [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}})
    if (!schouten_jacobiator(chart_bivector(k, n, true)).is_zero()) return false;
  return true;
}

bool counts(std::string& note) {
  const std::vector<std::tuple<int, int, std::size_t>> frozen{{2, 1, 3}, {3, 1, 7}, {4, 2, 33}};
  for (const auto& [n, k, size] : frozen) {
    if (oracle::brute_force(n, k, true).size() != size) return false;
    if (enumerate(n, k, perm_family::bounded).size() != size) return false;
  }
  note = "3, 7, 33";
  return true;
}

bool matrix_perm_consistency(std::string& note) {
  point_sampler sampler(12);
  std::size_t points = 0;
  for (const auto& [k, n] : shapes_up_to(6))
    for (int t = 0; t < 100; ++t) {
      const auto m = t % 3 == 0 ? sampler.degenerate(k, n) : sampler.generic(k, n);
      if (r_of_matrix(m) != r_of_perm(f_of_matrix(m))) {
        note = "at " + io::to_json(m.entries()).dump();
        return false;
      }
      ++points;
    }
  note = std::to_string(points) + " points";
  return true;
}

}  // namespace

int main() {
  const std::vector<criterion> criteria{
      {1, "G(2,4) worked examples", 1, worked_examples},
      {2, "characteristic matrices", 1, characteristic_matrices},
      {3, "bracket equality", 60, bracket_equality},
      {4, "leaf ranks", 5, leaf_ranks},
      {5, "rank-stratum identity", 600, rank_stratum},
      {6, "round-trips", 120, round_trips},
      {7, "end identity", 120, end_identity},
      {8, "orbit count", 60, orbit_counts},
      {9, "Bruhat consistency", 120, bruhat},
      {10, "Jacobi certificates", 120, jacobi},
      {11, "enumeration counts", 60, counts},
      {12, "matrix/permutation consistency", 60, matrix_perm_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && seconds > c.limit_seconds) {
      ok = false;
      note += " (over the time limit)";
    }
    failures += ok ? 0 : 1;
    std::printf("%s %2d %s [%.3fs / %.0fs]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, note.empty() ? "" : " ", note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
