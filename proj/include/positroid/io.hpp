#pragma once

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "positroid/affperm.hpp"
#include "positroid/bundles.hpp"
#include "positroid/error.hpp"
#include "positroid/linalg.hpp"
#include "positroid/poisson.hpp"
#include "positroid/rankmat.hpp"

namespace positroid::io {

using json = nlohmann::json;

namespace detail {

inline std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

/// The message of e without its leading "Code: " tag.
inline std::string bare(const error& e) {
  const std::string what = e.what();
  const auto cut = what.find(": ");
  return cut == std::string::npos ? what : what.substr(cut + 2);
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw error(errc::parse_error, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw error(errc::parse_error, std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

inline json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, detail::position(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON");
  }
}

inline json to_json(const rational& q) { return to_string(q); }

inline rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw error(errc::parse_error, "rational entries must be integers or \"p/q\" strings");
}

inline json to_json(const rational_matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& q : m.row(r)) row.push_back(to_json(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const rational_vector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

inline rational_matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw error(errc::parse_error, "a matrix is a nonempty array of rows");
  std::vector<std::vector<rational>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw error(errc::parse_error, "row " + std::to_string(r + 1) + " is not an array");
    std::vector<rational> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      try {
        row.push_back(rational_from_json(j[r][c]));
      } catch (const error& e) {
        throw error(errc::parse_error,
                    "row " + std::to_string(r + 1) + ", entry " + std::to_string(c + 1) + ": " + detail::bare(e));
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw error(errc::parse_error, "row " + std::to_string(r + 1) + " has a different length");
    rows.push_back(std::move(row));
  }
  return rational_matrix::from_rows(rows);
}

/// Reads a matrix either as JSON ("[[1, \"1/2\"], ...]") or as plain text
/// with one row per line and entries separated by spaces or commas.
inline rational_matrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw error(errc::parse_error, "empty matrix input");
  if (text[first] == '[') return matrix_from_json(parse(text));
  std::vector<std::vector<rational>> rows;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    ++line_no;
    const auto line = text.substr(line_start, line_end - line_start);
    std::vector<rational> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r'))
        ++pos;
      if (pos >= line.size()) break;
      const auto start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != ',' && line[pos] != '\r')
        ++pos;
      try {
        row.push_back(parse_rational(line.substr(start, pos - start)));
      } catch (const error& e) {
        throw error(errc::parse_error,
                    "line " + std::to_string(line_no) + ", column " + std::to_string(start + 1) + ": " + detail::bare(e));
      }
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size())
        throw error(errc::parse_error, "line " + std::to_string(line_no) + ", column 1: row has a different length");
      rows.push_back(std::move(row));
    }
    line_start = line_end + 1;
  }
  if (rows.empty()) throw error(errc::parse_error, "empty matrix input");
  return rational_matrix::from_rows(rows);
}

inline json to_json(const affine_permutation& f) { return {{"n", f.n()}, {"window", f.window()}}; }

inline affine_permutation perm_from_json(const json& j) {
  return {detail::field<int>(j, "n"), detail::field<std::vector<index_t>>(j, "window")};
}

inline json to_json(const permutation_class& c) {
  return {{"k", c.k}, {"bounded", c.bounded}, {"plus", c.plus}, {"strict_plus", c.strict_plus}};
}

inline json to_json(const orbit_structure& s) {
  json orbits = json::array();
  for (const auto& o : s.orbits)
    orbits.push_back(
        {{"rep", o.rep}, {"period", o.period}, {"cycle_length", o.cycle_length}, {"char_block", o.char_block}});
  return {{"orbits", std::move(orbits)}, {"p", s.p}};
}

inline json to_json(const binary_periodic_matrix& a) { return a.rows(); }

inline binary_periodic_matrix binary_matrix_from_json(int n, const json& j) {
  try {
    return {n, j.get<std::vector<binary_row>>()};
  } catch (const json::exception&) {
    throw error(errc::parse_error, "a binary matrix is an array of 0/1 rows");
  }
}

inline json to_json(const cyclic_rank_matrix& r) { return {{"n", r.n()}, {"k", r.k()}, {"h_band", r.h_band()}}; }

inline cyclic_rank_matrix rank_matrix_from_json(const json& j) {
  return {detail::field<int>(j, "n"), detail::field<int>(j, "k"),
          detail::field<std::vector<std::vector<index_t>>>(j, "h_band")};
}

inline json to_json(const axiom_report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json witnesses = json::array();
    for (const auto& [i, j] : c.witnesses) witnesses.push_back({i, j});
    checks.push_back({{"axiom", c.axiom}, {"satisfied", c.satisfied}, {"witnesses", std::move(witnesses)}});
  }
  return {{"ok", report.ok()}, {"checks", std::move(checks)}};
}

inline json to_json(const bundle_type& b) {
  json summands = json::array();
  for (const auto& s : b.summands()) {
    json item = {{"rank", s.rank}, {"d", s.degrees}};
    if (s.lambda) item["lambda"] = to_string(*s.lambda);
    summands.push_back(std::move(item));
  }
  return {{"n", b.n()}, {"summands", std::move(summands)}};
}

inline bundle_type bundle_from_json(const json& j) {
  const int n = detail::field<int>(j, "n");
  const auto items = detail::field<json>(j, "summands");
  if (!items.is_array()) throw error(errc::parse_error, "\"summands\" must be an array");
  std::vector<summand> summands;
  for (const auto& item : items) {
    summand s{detail::field<int>(item, "rank"), detail::field<degree_vector>(item, "d"), std::nullopt};
    if (item.contains("lambda")) s.lambda = rational_from_json(item.at("lambda"));
    summands.push_back(std::move(s));
  }
  return {n, std::move(summands)};
}

inline json to_json(const leaf_report& r) {
  return {{"f", r.f.window()},
          {"ell", r.ell},
          {"p", r.p},
          {"dim_X_f", r.dim_X_f},
          {"predicted_leaf_dim", r.predicted_leaf_dim},
          {"bivector_rank", r.bivector_rank},
          {"consistent", r.consistent}};
}

inline json to_json(const skew_form& s) {
  json basis = json::array();
  for (const auto& [a, c] : s.basis) basis.push_back({{"row", a + 1}, {"complement", to_json(c)}});
  return {{"k", s.k}, {"n", s.n}, {"basis", std::move(basis)}, {"values", to_json(s.values)}};
}

}  // namespace positroid::io
