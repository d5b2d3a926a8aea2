#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "positroid/io.hpp"

using positroid::io::json;

namespace {

struct result {
  int status;
  std::string out;
};

result run(const std::string& args, const std::string& input = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in_path = dir / "positroid_cli_test_input.txt";
  std::ofstream(in_path) << input;
  const std::string command = std::string(POSITROID_CLI) + " " + args + " < " + in_path.string() + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (const auto got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("stratify reads stdin") {
  const auto a = run("stratify", "[[1,0,0,0],[0,1,1,0]]");
  REQUIRE(a.status == 0);
  const auto j = json::parse(a.out);
  CHECK(j["leaf_report"].dump() ==
        R"({"bivector_rank":0,"consistent":true,"dim_X_f":1,"ell":3,"f":[5,3,6,4],"p":2,"predicted_leaf_dim":0})");
  CHECK(j["window"] == json::array({5, 3, 6, 4}));
  const auto b = run("stratify -", "1 1 1\n");
  REQUIRE(b.status == 0);
  CHECK(json::parse(b.out)["leaf_report"]["bivector_rank"] == 2);
  CHECK(json::parse(b.out)["window"] == json::array({2, 3, 4}));
}

TEST_CASE("parse failures exit with 2") {
  const auto a = run("stratify", "1 0\n0 1/0\n");
  CHECK(a.status == 2);
  CHECK(a.out.find("ParseError: line 2, column 3") != std::string::npos);
  CHECK(run("stratify", "[[1, 0], [0, 1/0]]").status == 2);
  CHECK(run("stratify", "0 0 0\n").status == 2);
  CHECK(run("stratify /nonexistent/matrix.txt").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("bundle reports") {
  const auto a = json::parse(run("bundle", R"({"n":4,"window":[5,3,6,4]})").out);
  CHECK(a["end_dim"] == 5);
  CHECK(a["membership"]["u_plus"] == true);
  CHECK(a["membership"]["u_plus_plus"] == true);
  CHECK(a["identity_holds"] == true);
  const auto b = json::parse(run("bundle --window 2,3,4,9").out);
  CHECK(b["end_dim"] == 5);
  CHECK(b["membership"]["u_plus_plus"] == false);
  const auto c = json::parse(run("bundle --window 3,4,5,6").out);
  REQUIRE(c["bundle"]["summands"].size() == 1);
  CHECK(c["bundle"]["summands"][0]["rank"] == 3);
  const auto d = run("bundle --window 0,4,8");
  CHECK(d.status == 2);
  CHECK(d.out.find("NotPlus") != std::string::npos);
}

TEST_CASE("perm and rankmat subcommands") {
  CHECK(json::parse(run("perm classify --window 2,3,4,9").out)["bounded"] == false);
  CHECK(json::parse(run("perm length --window 5,3,6,4").out)["length"] == 3);
  CHECK(json::parse(run("perm orbits --window 5,3,6,4").out)["p"] == 2);
  const auto built = run("rankmat build --window 5,3,6,4");
  REQUIRE(built.status == 0);
  const auto r = json::parse(built.out)["rank_matrix"].dump();
  const auto checked = run("rankmat check", r);
  CHECK(checked.status == 0);
  CHECK(json::parse(checked.out)["ok"] == true);
  CHECK(json::parse(run("rankmat extract", r).out) == json::parse(R"({"n":4,"window":[5,3,6,4]})"));
  auto broken = json::parse(r);
  broken["h_band"][0][2] = 2;
  CHECK(run("rankmat check", broken.dump()).status == 1);
  CHECK(run("rankmat extract", broken.dump()).status == 2);
}

TEST_CASE("enumerate") {
  CHECK(json::parse(run("enumerate --n 2 --k 1").out)["count"] == 3);
  CHECK(json::parse(run("enumerate --n 3 --k 1").out)["count"] == 7);
  CHECK(json::parse(run("enumerate --n 4 --k 2").out)["count"] == 33);
  const auto csv = run("enumerate --n 2 --k 1 --format csv");
  CHECK(csv.out.starts_with("length,window\n"));
  CHECK(run("enumerate --n 7 --k 1").status == 2);
}

TEST_CASE("verify suites") {
  const auto a = run("verify brackets --samples 100 --seed 7");
  REQUIRE(a.status == 0);
  const auto j = json::parse(a.out);
  CHECK(j[0]["suite"] == "brackets");
  CHECK(j[0]["passed"] == true);
  CHECK(j[0]["seed"] == 7);
  const auto b = json::parse(run("verify jacobi").out);
  CHECK(b[0]["checked"] == 3);
  CHECK(b[0]["passed"] == true);
  CHECK(run("verify roundtrip --n-max 5").status == 0);
  CHECK(run("verify all --n-max 4 --samples 5 --format csv").out.starts_with("checked,counterexamples,passed,seed,suite"));
  CHECK(run("verify jacobi --jacobi-pairs 1,2 1,3").status == 0);
  CHECK(run("verify all --n-max 7").status == 2);
  CHECK(run("verify brackets --samples 0").status == 2);
  CHECK(run("verify nope").status == 2);
}

TEST_CASE("output is deterministic") {
  const auto a = run("verify all --n-max 4 --samples 10 --seed 3 --workers 3");
  const auto b = run("verify all --n-max 4 --samples 10 --seed 3 --workers 1");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto out = std::filesystem::temp_directory_path() / "positroid_cli_test_output.json";
  CHECK(run("--output " + out.string() + " perm orbits --window 5,3,6,4").out.empty());
  std::ifstream in(out);
  CHECK(json::parse(in)["p"] == 2);
}
