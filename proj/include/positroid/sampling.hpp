#pragma once

#include <cstdint>
#include <random>

#include "positroid/linalg.hpp"

namespace positroid {

/// Seeded source of integer test matrices with entries in [-bound, bound].
/// Draws reduce raw 64-bit output directly, so a seed gives the same stream
/// on every standard library.
class point_sampler {
 public:
  explicit point_sampler(std::uint64_t seed, int bound = 9) : rng_(seed), bound_(bound) {}

  int entry() { return static_cast<int>(rng_() % static_cast<std::uint64_t>(2 * bound_ + 1)) - bound_; }

  std::size_t index(std::size_t size) { return static_cast<std::size_t>(rng_() % size); }

  rational_matrix matrix(std::size_t rows, std::size_t cols) {
    rational_matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry();
    return m;
  }

  /// Uniform entries, redrawn until the rows are independent.
  grassmann_point generic(int k, int n) {
    for (;;) {
      auto m = matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
      if (rank(m) == static_cast<std::size_t>(k)) return grassmann_point(std::move(m));
    }
  }

  /// Like generic, but some columns are zeroed and others copied or scaled
  /// from a neighbour, which reaches lower strata.
  grassmann_point degenerate(int k, int n) {
    const auto rows = static_cast<std::size_t>(k);
    const auto cols = static_cast<std::size_t>(n);
    for (;;) {
      auto m = matrix(rows, cols);
      const std::size_t edits = 1 + index(cols - 1);
      for (std::size_t e = 0; e < edits; ++e) {
        const std::size_t c = index(cols);
        const std::size_t kind = index(3);
        const std::size_t src = (c + 1) % cols;
        const int scale = entry();
        for (std::size_t r = 0; r < rows; ++r) {
          if (kind == 0)
            m(r, c) = 0;
          else if (kind == 1)
            m(r, c) = m(r, src);
          else
            m(r, c) = m(r, src) * scale;
        }
      }
      if (rank(m) == rows) return grassmann_point(std::move(m));
    }
  }

  /// A random invertible k x k matrix.
  rational_matrix invertible(int k) {
    for (;;) {
      auto g = matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
      if (rank(g) == static_cast<std::size_t>(k)) return g;
    }
  }

 private:
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace positroid
