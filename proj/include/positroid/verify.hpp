#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "positroid/bruhat.hpp"
#include "positroid/bundles.hpp"
#include "positroid/io.hpp"
#include "positroid/poisson.hpp"
#include "positroid/rankmat.hpp"
#include "positroid/sampling.hpp"

namespace positroid {

struct run_config {
  std::uint64_t seed = 7;
  int samples = 100;
  int n_max = 5;
  std::vector<std::pair<int, int>> jacobi_pairs{{1, 2}, {1, 3}, {2, 4}};
  unsigned workers = 0;  // 0 picks the hardware concurrency
};

struct suite_report {
  std::string suite;
  std::size_t checked = 0;
  std::vector<io::json> counterexamples;

  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Maps fn over items on up to `workers` threads; results keep input order.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned workers) {
  using result = decltype(fn(items.front()));
  std::vector<result> out(items.size());
  if (items.empty()) return out;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(items.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) out[i] = fn(items[i]);
    }));
  for (auto& t : tasks) t.get();
  return out;
}

namespace detail {

inline std::vector<std::pair<int, int>> shapes_up_to(int n_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = 2; n <= n_max; ++n)
    for (int k = 1; k < n; ++k) out.emplace_back(k, n);
  return out;
}

/// Independent stream per shape so results do not depend on scheduling.
inline std::uint64_t shape_seed(std::uint64_t seed, int k, int n) {
  return seed * 1000003u + static_cast<std::uint64_t>(k) * 101u + static_cast<std::uint64_t>(n);
}

struct partial {
  std::size_t checked = 0;
  std::vector<io::json> counterexamples;
};

inline suite_report merge(std::string name, const std::vector<partial>& parts) {
  suite_report out{std::move(name), 0, {}};
  for (const auto& p : parts) {
    out.checked += p.checked;
    out.counterexamples.insert(out.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
  }
  return out;
}

inline grassmann_point sample_point(point_sampler& sampler, int k, int n, int t) {
  return t % 2 ? sampler.degenerate(k, n) : sampler.generic(k, n);
}

}  // namespace detail

/// f_of_A o A_of_bundle o bundle_of_perm = id and orbit counts on the plus
/// class; perm_of_r o r_of_perm = id on the bounded class.
inline suite_report verify_roundtrip(const run_config& config) {
  auto parts = parallel_map(detail::shapes_up_to(config.n_max), [](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    detail::partial out;
    for (const auto& f : enumerate(n, k, perm_family::plus, {n})) {
      ++out.checked;
      if (f_of_A(A_of_bundle(bundle_of_perm(f))) != f)
        out.counterexamples.push_back({{"check", "bundle"}, {"perm", io::to_json(f)}});
      if (shifted_orbits(f).orbits.size() != static_cast<std::size_t>(k + 1))
        out.counterexamples.push_back({{"check", "orbit_count"}, {"perm", io::to_json(f)}});
      if (!classify(f).bounded) continue;
      if (perm_of_r(r_of_perm(f)) != f) out.counterexamples.push_back({{"check", "rank"}, {"perm", io::to_json(f)}});
    }
    return out;
  }, config.workers);
  return detail::merge("roundtrip", parts);
}

/// ell(f) = dim End(V_f) - p(f) on the plus class.
inline suite_report verify_prop_end(const run_config& config) {
  auto parts = parallel_map(detail::shapes_up_to(config.n_max), [](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    detail::partial out;
    for (const auto& f : enumerate(n, k, perm_family::plus, {n})) {
      ++out.checked;
      const auto b = bundle_of_perm(f);
      const index_t ell = length(f);
      const index_t end = end_dim(b);
      const auto p = static_cast<index_t>(b.summands().size());
      if (ell != end - p)
        out.counterexamples.push_back({{"perm", io::to_json(f)}, {"ell", ell}, {"end_dim", end}, {"p", p}});
    }
    return out;
  }, config.workers);
  return detail::merge("prop_end", parts);
}

/// chi_twisted = b_prime_st = 2 fo_massey at sampled points.
inline suite_report verify_brackets(const run_config& config) {
  auto parts = parallel_map(detail::shapes_up_to(std::min(config.n_max, 6)), [&](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    point_sampler sampler(detail::shape_seed(config.seed, k, n));
    detail::partial out;
    for (int t = 0; t < config.samples; ++t) {
      const auto m = detail::sample_point(sampler, k, n, t);
      const auto basis = kernel_basis(m);
      const auto chi = bivector(m, bivector_method::chi_twisted, basis).values;
      const auto bst = bivector(m, bivector_method::b_prime_st, basis).values;
      auto fo = bivector(m, bivector_method::fo_massey, basis).values;
      for (std::size_t r = 0; r < fo.rows(); ++r)
        for (std::size_t c = 0; c < fo.cols(); ++c) fo(r, c) *= 2;
      ++out.checked;
      if (chi != bst || chi != fo) out.counterexamples.push_back({{"matrix", io::to_json(m.entries())}});
    }
    return out;
  }, config.workers);
  return detail::merge("brackets", parts);
}

/// rank = k(n-k) - ell(f_M) - (p(f_M) - 1), stable under GL_k and rotation.
inline suite_report verify_ranks(const run_config& config) {
  auto parts = parallel_map(detail::shapes_up_to(std::min(config.n_max, 6)), [&](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    point_sampler sampler(detail::shape_seed(config.seed, k, n) ^ 0x5eedu);
    detail::partial out;
    for (int t = 0; t < config.samples; ++t) {
      const auto m = detail::sample_point(sampler, k, n, t);
      const auto report = make_leaf_report(m);
      const auto gauge = grassmann_point(sampler.invertible(k) * m.entries());
      const auto rotated = grassmann_point(rotate_columns(m.entries()));
      const auto r = static_cast<std::size_t>(report.bivector_rank);
      ++out.checked;
      if (!report.consistent || skew_rank(bivector(gauge, bivector_method::chi_twisted)) != r ||
          skew_rank(bivector(rotated, bivector_method::chi_twisted)) != r)
        out.counterexamples.push_back({{"matrix", io::to_json(m.entries())}, {"leaf_report", io::to_json(report)}});
    }
    return out;
  }, config.workers);
  return detail::merge("ranks", parts);
}

inline suite_report verify_jacobi(const run_config& config) {
  auto parts = parallel_map(config.jacobi_pairs, [](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    detail::partial out{1, {}};
    if (!schouten_jacobiator(chart_bivector(k, n, true)).is_zero())
      out.counterexamples.push_back({{"k", k}, {"n", n}});
    return out;
  }, config.workers);
  return detail::merge("jacobi", parts);
}

/// Axioms for every r_of_perm on the bounded class, and r(M) = r(f_M) at
/// sampled points.
inline suite_report verify_axioms(const run_config& config) {
  auto parts = parallel_map(detail::shapes_up_to(config.n_max), [&](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    detail::partial out;
    for (const auto& f : enumerate(n, k, perm_family::bounded, {n})) {
      ++out.checked;
      const auto report = check_axioms(r_of_perm(f));
      if (!report.ok()) out.counterexamples.push_back({{"perm", io::to_json(f)}, {"report", io::to_json(report)}});
    }
    point_sampler sampler(detail::shape_seed(config.seed, k, n) ^ 0xa1u);
    for (int t = 0; t < config.samples; ++t) {
      const auto m = detail::sample_point(sampler, k, n, t);
      ++out.checked;
      if (r_of_matrix(m) != r_of_perm(f_of_matrix(m))) out.counterexamples.push_back({{"matrix", io::to_json(m.entries())}});
    }
    return out;
  }, config.workers);
  return detail::merge("axioms", parts);
}

/// Swap closure equals the r-matrix order on B(k,n), and the shift is the
/// unique minimum. Capped at n = 4.
inline suite_report verify_bruhat(const run_config& config) {
  auto parts = parallel_map(detail::shapes_up_to(std::min(config.n_max, 4)), [](std::pair<int, int> shape) {
    const auto [k, n] = shape;
    detail::partial out;
    const auto all = enumerate(n, k, perm_family::bounded, {n});
    const auto low = shift_power(n, k);
    swap_order order;
    for (const auto& f : all) {
      const auto& down = order.below(f);
      for (const auto& g : all) {
        ++out.checked;
        if (down.contains(g) != bruhat_leq(g, f))
          out.counterexamples.push_back({{"check", "closure"}, {"lower", io::to_json(g)}, {"upper", io::to_json(f)}});
      }
      if (!bruhat_leq(low, f) || (f != low && bruhat_leq(f, low)))
        out.counterexamples.push_back({{"check", "minimum"}, {"perm", io::to_json(f)}});
    }
    return out;
  }, config.workers);
  return detail::merge("bruhat", parts);
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip", "prop_end", "brackets", "ranks",
                                              "jacobi",    "axioms",   "bruhat"};
  return names;
}

inline std::vector<suite_report> run_suite(const std::string& name, const run_config& config) {
  if (name == "all") {
    std::vector<suite_report> out;
    for (const auto& s : suite_names()) out.push_back(run_suite(s, config).front());
    return out;
  }
  if (name == "roundtrip") return {verify_roundtrip(config)};
  if (name == "prop_end") return {verify_prop_end(config)};
  if (name == "brackets") return {verify_brackets(config)};
  if (name == "ranks") return {verify_ranks(config)};
  if (name == "jacobi") return {verify_jacobi(config)};
  if (name == "axioms") return {verify_axioms(config)};
  if (name == "bruhat") return {verify_bruhat(config)};
  throw error(errc::invalid_parameters, "unknown suite '" + name + "'");
}

namespace io {

inline json to_json(const suite_report& r) {
  return {{"suite", r.suite}, {"checked", r.checked}, {"passed", r.passed()}, {"counterexamples", r.counterexamples}};
}

}  // namespace io

}  // namespace positroid
