#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "positroid/verify.hpp"

using namespace positroid;
using io::json;

namespace {

constexpr int hard_cap = 6;

struct options {
  run_config run;
  std::string format = "json";
  std::string output;
  bool allow_large = false;
  std::vector<std::string> jacobi_pairs;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<index_t> parse_window(const std::string& text) {
  std::vector<index_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw error(errc::parse_error, "bad window entry '" + item + "'");
    }
  }
  if (out.empty()) throw error(errc::parse_error, "empty window");
  return out;
}

affine_permutation read_perm(const std::string& window, const std::string& path) {
  if (!window.empty()) {
    auto w = parse_window(window);
    const int n = static_cast<int>(w.size());
    return {n, std::move(w)};
  }
  return io::perm_from_json(io::parse(read_input(path)));
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const json& v) {
  auto s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

/// Arrays of flat objects become tables; anything else becomes key,value rows.
std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump() + "\n";
  std::ostringstream out;
  const bool table = doc.is_array() && !doc.empty() && doc.front().is_object();
  if (format == "csv") {
    if (table) {
      std::vector<std::string> keys;
      for (const auto& [key, _] : doc.front().items()) keys.push_back(key);
      for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
      out << "\n";
      for (const auto& row : doc) {
        for (std::size_t i = 0; i < keys.size(); ++i)
          out << (i ? "," : "") << (row.contains(keys[i]) ? csv_cell(row[keys[i]]) : "");
        out << "\n";
      }
    } else if (doc.is_object()) {
      out << "key,value\n";
      for (const auto& [key, value] : doc.items()) out << key << "," << csv_cell(value) << "\n";
    } else {
      out << csv_cell(doc) << "\n";
    }
    return out.str();
  }
  if (table) {
    for (const auto& row : doc) {
      bool first = true;
      for (const auto& [key, value] : row.items()) {
        out << (first ? "" : "  ") << key << "=" << scalar_text(value);
        first = false;
      }
      out << "\n";
    }
  } else if (doc.is_object()) {
    for (const auto& [key, value] : doc.items()) out << key << ": " << scalar_text(value) << "\n";
  } else {
    out << scalar_text(doc) << "\n";
  }
  return out.str();
}

void emit(const json& doc, const options& opt) {
  const auto text = render(doc, opt.format);
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw error(errc::invalid_parameters, "cannot write '" + opt.output + "'");
  out << text;
}

void check_config(options& opt) {
  if (opt.run.samples < 1) throw error(errc::invalid_parameters, "--samples must be at least 1");
  if (opt.run.n_max < 2) throw error(errc::invalid_parameters, "--n-max must be at least 2");
  if (opt.run.n_max > hard_cap && !opt.allow_large)
    throw error(errc::limit_exceeded, "--n-max above " + std::to_string(hard_cap) + " needs --allow-large");
  if (!opt.jacobi_pairs.empty()) {
    opt.run.jacobi_pairs.clear();
    for (const auto& p : opt.jacobi_pairs) {
      const auto v = parse_window(p);
      if (v.size() != 2) throw error(errc::parse_error, "jacobi pairs look like k,n");
      opt.run.jacobi_pairs.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
    }
  }
}

json band_of(const cyclic_rank_matrix& r) {
  json rows = json::array();
  for (index_t i = 1; i <= r.n(); ++i) {
    json row = json::array();
    for (index_t j = i - 1; j <= i + r.n() - 1; ++j) row.push_back(r.r(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_stratify(const std::string& path, const options& opt) {
  const grassmann_point m(io::parse_matrix(read_input(path)));
  const auto report = make_leaf_report(m);
  emit({{"leaf_report", io::to_json(report)},
        {"rank_matrix", io::to_json(r_of_matrix(m))},
        {"r_band", band_of(r_of_matrix(m))},
        {"window", report.f.window()}},
       opt);
  return report.consistent ? 0 : 1;
}

int cmd_bundle(const affine_permutation& f, const options& opt) {
  const auto b = bundle_of_perm(f);
  const auto flags = membership(b);
  const index_t ell = length(f);
  const index_t end = end_dim(b);
  const auto p = static_cast<index_t>(b.summands().size());
  emit({{"perm", io::to_json(f)},
        {"bundle", io::to_json(b)},
        {"A", io::to_json(A_of_bundle(b))},
        {"p", p},
        {"ell", ell},
        {"end_dim", end},
        {"membership", {{"u_plus", flags.in_u_plus}, {"u_plus_plus", flags.in_u_plus_plus}}},
        {"identity_holds", ell == end - p}},
       opt);
  return ell == end - p ? 0 : 1;
}

int cmd_perm(const std::string& action, const affine_permutation& f, const options& opt) {
  if (action == "classify") {
    emit(io::to_json(classify(f)), opt);
  } else if (action == "length") {
    emit({{"perm", io::to_json(f)}, {"length", length(f)}}, opt);
  } else {
    emit(io::to_json(shifted_orbits(f)), opt);
  }
  return 0;
}

int cmd_rankmat(const std::string& action, const std::string& window, const std::string& path, const options& opt) {
  if (action == "build") {
    const auto r = r_of_perm(read_perm(window, path));
    emit({{"rank_matrix", io::to_json(r)}, {"r_band", band_of(r)}}, opt);
    return 0;
  }
  const auto r = io::rank_matrix_from_json(io::parse(read_input(path)));
  if (action == "check") {
    const auto report = check_axioms(r);
    emit(io::to_json(report), opt);
    return report.ok() ? 0 : 1;
  }
  emit(io::to_json(perm_of_r(r)), opt);
  return 0;
}

int cmd_enumerate(int n, int k, const std::string& family, const options& opt) {
  const auto fam = family == "plus" ? perm_family::plus : perm_family::bounded;
  const int cap = opt.allow_large ? std::max(n, hard_cap) : hard_cap;
  const auto perms = enumerate(n, k, fam, {cap});
  if (opt.format == "json") {
    json windows = json::array();
    for (const auto& f : perms) windows.push_back(f.window());
    emit({{"n", n}, {"k", k}, {"family", family}, {"count", perms.size()}, {"windows", std::move(windows)}}, opt);
    return 0;
  }
  json rows = json::array();
  for (const auto& f : perms) {
    std::string w;
    for (auto v : f.window()) w += (w.empty() ? "" : " ") + std::to_string(v);
    rows.push_back({{"window", w}, {"length", length(f)}});
  }
  emit(rows, opt);
  return 0;
}

int cmd_verify(const std::string& suite, const options& opt) {
  const auto reports = run_suite(suite, opt.run);
  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    auto j = io::to_json(r);
    j["seed"] = opt.run.seed;
    if (opt.format != "json") j["counterexamples"] = r.counterexamples.size();
    out.push_back(std::move(j));
  }
  emit(out, opt);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positroid strata, bundle types and Poisson bivectors on Grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();
  options opt;
  app.add_option("--seed", opt.run.seed, "Sampling seed")->capture_default_str();
  app.add_option("--samples", opt.run.samples, "Points per shape")->capture_default_str();
  app.add_option("--n-max", opt.run.n_max, "Largest n for exhaustive suites")->capture_default_str();
  app.add_option("--workers", opt.run.workers, "Worker threads, 0 for all cores")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write to this file instead of stdout");
  app.add_option("--jacobi-pairs", opt.jacobi_pairs, "Shapes for the Jacobi suite, as k,n");
  app.add_flag("--allow-large", opt.allow_large, "Lift the n <= 6 cap (may be slow)");

  std::string path = "-";
  std::string window;
  std::string action;
  int n = 0;
  int k = 0;
  std::string family = "bounded";
  std::string suite;

  auto* stratify = app.add_subcommand("stratify", "Leaf report of a k x n matrix");
  stratify->add_option("file", path, "Matrix file, or - for stdin");

  auto* bundle = app.add_subcommand("bundle", "Bundle type of a plus permutation");
  bundle->add_option("file", path, "Permutation JSON, or - for stdin");
  bundle->add_option("--window", window, "Window as comma-separated values");

  auto* perm = app.add_subcommand("perm", "Permutation reports");
  perm->add_option("action", action)->required()->check(CLI::IsMember({"classify", "length", "orbits"}));
  perm->add_option("file", path, "Permutation JSON, or - for stdin");
  perm->add_option("--window", window, "Window as comma-separated values");

  auto* rankmat = app.add_subcommand("rankmat", "Cyclic rank matrices");
  rankmat->add_option("action", action)->required()->check(CLI::IsMember({"build", "check", "extract"}));
  rankmat->add_option("file", path, "Permutation JSON for build, rank matrix JSON otherwise");
  rankmat->add_option("--window", window, "Window for build");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List B(k,n) or the plus class");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--k", k)->required();
  enumerate_cmd->add_option("--family", family)->check(CLI::IsMember({"bounded", "plus"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    check_config(opt);
    if (*stratify) return cmd_stratify(path, opt);
    if (*bundle) return cmd_bundle(read_perm(window, path), opt);
    if (*perm) return cmd_perm(action, read_perm(window, path), opt);
    if (*rankmat) return cmd_rankmat(action, window, path, opt);
    if (*enumerate_cmd) return cmd_enumerate(n, k, family, opt);
    if (*verify) return cmd_verify(suite, opt);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
