#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "frobstar/corpus.hpp"
#include "frobstar/io.hpp"
#include "frobstar/report.hpp"

using namespace frobstar;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const Tolerance tol{};

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(FROBSTAR_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const json& j) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream f(p);
  f << j.dump(2);
  return p;
}

json z2_algebra_graded() {
  // C[Z/2] with grade(e) = 0, grade(g) = 1: the graded group algebra of the
  // trivial group with m = 2
  return json{{"schema", "algebra.v1"},
              {"dim", 2},
              {"m", 2},
              {"grades", {0, 1}},
              {"structure",
               {{0, 0, 0, 1.0}, {0, 1, 1, 1.0}, {1, 0, 1, 1.0}, {1, 1, 0, 1.0}}},
              {"lambda", {1.0, 0.0}},
              {"star", {{"perm", {0, 1}}}},
              {"labels", {"e", "g"}}};
}

}  // namespace

TEST_CASE("group round trip through JSON") {
  auto g = corpus::dihedral(4);
  json j = io::group_to_json(g);
  auto back = io::parse_group(j);
  CHECK(back.order == g.order);
  CHECK(back.cayley == g.cayley);
  CHECK(back.labels == g.labels);
}

TEST_CASE("group from permutation JSON") {
  json j{{"permutations", {{1, 0, 2}, {1, 2, 0}}}, {"degree", 3}};
  CHECK(io::parse_group(j).order == 6);
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(io::parse_group(json{{"order", 2}}),
                       doctest::Contains("cayley"), InvalidInput);
  CHECK_THROWS_WITH_AS(io::parse_automorphism(json{{"perm", {0, 1}}}),
                       doctest::Contains("'m'"), InvalidInput);
  json bad = z2_algebra_graded();
  bad.erase("lambda");
  CHECK_THROWS_WITH_AS(io::parse_graded_algebra(bad, tol),
                       doctest::Contains("lambda"), InvalidInput);
}

TEST_CASE("algebra.v1 parsing reconstructs a valid graded algebra") {
  auto a = io::parse_graded_algebra(z2_algebra_graded(), tol);
  CHECK(a.dim() == 2);
  CHECK(a.modulus() == 2);
  CHECK((a.base().spec().unit() - Vector::Unit(2, 0)).norm() < 1e-9);
  CHECK(validate_graded(a, tol).pass());
}

TEST_CASE("dense star matrix input is accepted") {
  json j = z2_algebra_graded();
  j["star"] = {{1.0, 0.0}, {0.0, 1.0}};
  auto a = io::parse_graded_algebra(j, tol);
  CHECK(validate_graded(a, tol).pass());
}

TEST_CASE("file fingerprint is content-determined") {
  auto p1 = write_temp("fp_a.json", io::group_to_json(corpus::cyclic(3)));
  auto p2 = write_temp("fp_b.json", io::group_to_json(corpus::cyclic(3)));
  auto p3 = write_temp("fp_c.json", io::group_to_json(corpus::cyclic(4)));
  CHECK(io::file_fingerprint(p1.string()) == io::file_fingerprint(p2.string()));
  CHECK(io::file_fingerprint(p1.string()) != io::file_fingerprint(p3.string()));
}

TEST_CASE("CLI: check-axioms on a bundled group passes") {
  auto res = run_cli("check-axioms --input " +
                     std::string(FROBSTAR_DATA_DIR) + "/groups/S3.json");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("RESULT: PASS") != std::string::npos);
}

TEST_CASE("CLI: corrupted Cayley table exits 2 with a diagnostic") {
  json j = io::group_to_json(corpus::cyclic(3));
  j["cayley"][1][1] = 1;
  auto p = write_temp("corrupt_group.json", j);
  auto res = run_cli("check-axioms --input " + p.string());
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("error") != std::string::npos);
}

TEST_CASE("CLI: characters of S3 reports degrees 1,1,2") {
  auto res = run_cli("characters --format json --input " +
                     std::string(FROBSTAR_DATA_DIR) + "/groups/S3.json");
  CHECK(res.exit_code == 0);
  json j = json::parse(res.output);
  std::vector<int> degrees;
  for (const auto& row : j.at("characters"))
    degrees.push_back(row.at("degree").get<int>());
  CHECK(degrees == std::vector<int>{1, 1, 2});
}

TEST_CASE("CLI: twisted requires an automorphism or m > 1") {
  auto res = run_cli("twisted --input " + std::string(FROBSTAR_DATA_DIR) +
                     "/groups/C3.json");
  CHECK(res.exit_code == 2);
}

TEST_CASE("CLI: full-report on Z/3 with inversion") {
  std::string data = FROBSTAR_DATA_DIR;
  auto res = run_cli("full-report --format json --input " + data +
                     "/groups/C3.json --automorphism " + data +
                     "/automorphisms/z3_inversion.json");
  CHECK(res.exit_code == 0);
  json j = json::parse(res.output);
  CHECK(j.at("pass").get<bool>());
  auto gram = j.at("twisted").at("twisted_gram");
  REQUIRE(gram.size() == 1);
  CHECK(std::abs(gram[0][0][0].get<double>() - 3.0) < 1e-6);
}

TEST_CASE("CLI: graded algebra.v1 input through the twisted pipeline") {
  auto p = write_temp("z2_graded_algebra.json", z2_algebra_graded());
  auto res = run_cli("twisted --format json --input " + p.string());
  CHECK(res.exit_code == 0);
  json j = json::parse(res.output);
  CHECK(j.at("pass").get<bool>());
  auto gram = j.at("twisted").at("twisted_gram");
  REQUIRE(gram.size() == 1);
  // twisted diagonal = |G~|/m = 2/2 = 1
  CHECK(std::abs(gram[0][0][0].get<double>() - 1.0) < 1e-6);
}

TEST_CASE("JSON report numbers round-trip exactly") {
  report::RunConfig cfg;
  cfg.command = "characters";
  cfg.input_path = std::string(FROBSTAR_DATA_DIR) + "/groups/Q8.json";
  cfg.format = "json";
  auto res = report::run(cfg);
  REQUIRE(res.exit_code == 0);
  json j = json::parse(res.json);
  CHECK(json::parse(j.dump()) == j);
}
