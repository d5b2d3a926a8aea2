#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "positroid/error.hpp"

namespace positroid {

using integer = boost::multiprecision::mpz_int;
using rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", "p" or "-p/q". Zero denominators and stray characters are
/// parse errors. The result is always in lowest terms.
inline rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto to_integer = [](std::string_view s) {
    if (s.front() == '+') s.remove_prefix(1);
    return integer(std::string(s));
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_int(num)) throw error(errc::parse_error, "bad rational literal '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return rational(to_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_int(den)) throw error(errc::parse_error, "bad rational literal '" + std::string(text) + "'");
  const integer d = to_integer(den);
  if (d == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  return rational(to_integer(num), d);
}

/// "p/q" with q > 0, or "p" when q == 1.
inline std::string to_string(const rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace positroid
