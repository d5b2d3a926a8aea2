#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "positroid/error.hpp"
#include "positroid/rational.hpp"

namespace positroid {

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored.
class polynomial {
 public:
  using exponents = std::vector<int>;

  explicit polynomial(std::size_t vars = 0) : vars_(vars) {}

  static polynomial constant(std::size_t vars, const rational& c) {
    polynomial p(vars);
    p.add_term(exponents(vars, 0), c);
    return p;
  }

  static polynomial variable(std::size_t vars, std::size_t v) {
    polynomial p(vars);
    exponents e(vars, 0);
    e.at(v) = 1;
    p.add_term(e, 1);
    return p;
  }

  std::size_t vars() const noexcept { return vars_; }
  const std::map<exponents, rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const exponents& e, const rational& c) {
    if (e.size() != vars_) throw error(errc::invalid_parameters, "exponent vector has wrong arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int x : e) d += x;
      best = std::max(best, d);
    }
    return best;
  }

  polynomial derivative(std::size_t v) const {
    polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      auto f = e;
      --f[v];
      out.add_term(f, c * e[v]);
    }
    return out;
  }

  rational evaluate(std::span<const rational> point) const {
    if (point.size() != vars_) throw error(errc::invalid_parameters, "evaluation point has wrong arity");
    rational sum = 0;
    for (const auto& [e, c] : terms_) {
      rational term = c;
      for (std::size_t v = 0; v < vars_; ++v)
        for (int t = 0; t < e[v]; ++t) term *= point[v];
      sum += term;
    }
    return sum;
  }

  polynomial& operator+=(const polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  polynomial& operator-=(const polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  polynomial& operator*=(const rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
  friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
  friend polynomial operator*(polynomial a, const rational& s) { return a *= s; }
  friend polynomial operator*(const rational& s, polynomial a) { return a *= s; }

  friend polynomial operator*(const polynomial& a, const polynomial& b) {
    a.check(b);
    polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        exponents e(a.vars_);
        for (std::size_t v = 0; v < a.vars_; ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend polynomial operator-(polynomial a) { return a *= -1; }

  friend bool operator==(const polynomial&, const polynomial&) = default;

 private:
  void check(const polynomial& o) const {
    if (o.vars_ != vars_) throw error(errc::invalid_parameters, "polynomials in different rings");
  }

  std::size_t vars_;
  std::map<exponents, rational> terms_;
};

/// Human-readable form with variables x0, x1, ...
inline std::string to_string(const polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) out += "*x" + std::to_string(v) + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
  }
  return out;
}

}  // namespace positroid
