#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "schottky_lab/error.hpp"
#include "schottky_lab/io.hpp"

using namespace schottky_lab;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("number parsing") {
  CHECK(cli::parse_real("0.5") == 0.5);
  CHECK(cli::parse_real("1/8") == 0.125);
  CHECK(cli::parse_real("pi/6") == doctest::Approx(std::numbers::pi / 6));
  CHECK(cli::parse_real("-pi/4") == doctest::Approx(-std::numbers::pi / 4));
  CHECK(cli::parse_real("2pi/3") == doctest::Approx(2 * std::numbers::pi / 3));
  CHECK_THROWS_AS(cli::parse_real("abc"), SchottkyError);
  CHECK_THROWS_AS(cli::parse_real("1/0"), SchottkyError);
  CHECK(cli::parse_point("3+4i").value() == Complex(3, 4));
  CHECK(cli::parse_point("-i").value() == Complex(0, -1));
  CHECK(cli::parse_point("2.5").value() == Complex(2.5, 0));
  CHECK(cli::parse_point("1e-3-2i").value() == Complex(1e-3, -2));
  CHECK(cli::parse_point("inf").is_infinite());
  CHECK(cli::parse_point(" -i").value() == Complex(0, -1));
  CHECK_THROWS_AS(cli::parse_point("3+xi"), SchottkyError);
}

TEST_CASE("verify exit codes") {
  const auto ok = run({"verify", data("genus2_classical.json")});
  CHECK(ok.code == cli::kExitPass);
  CHECK(json::parse(ok.out)["pass"] == true);
  CHECK(ok.err.find("PASS") != std::string::npos);
  CHECK(run({"verify", data("tangent_circles.json")}).code == cli::kExitFail);
  CHECK(run({"verify", data("truncated.json")}).code == cli::kExitBadInput);
  CHECK(run({"verify", data("missing.json")}).code == cli::kExitBadInput);
  CHECK(run({"verify", "--mode", "noded", data("noded_genus2.json")}).code == cli::kExitPass);
  CHECK(run({"verify", "--mode", "classical", data("noded_genus2.json")}).code == cli::kExitFail);
  CHECK(run({"verify", "--mode", "bogus", data("noded_genus2.json")}).code == cli::kExitBadInput);
  CHECK(run({"--tol", "-1", "verify", data("genus2_classical.json")}).code == cli::kExitBadInput);
  const auto text = run({"--format", "text", "verify", data("genus2_classical.json")});
  CHECK(text.out == "classical: PASS\n");
}

TEST_CASE("limitset output") {
  const auto one = run({"--depth", "1", "limitset", data("genus2_classical.json")});
  CHECK(one.code == cli::kExitPass);
  std::size_t circles = 0;
  for (auto p = one.out.find("<circle "); p != std::string::npos; p = one.out.find("<circle ", p + 1)) ++circles;
  CHECK(circles == 4);

  const auto dir = std::filesystem::temp_directory_path() / "schottky_lab_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.ppm", b = dir / "b.ppm";
  CHECK(run({"--depth", "3", "--format", "ppm", "-o", a.string(), "limitset", data("genus2_classical.json")}).code == 0);
  CHECK(run({"--depth", "3", "--format", "ppm", "-o", b.string(), "limitset", data("genus2_classical.json")}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("P6\n", 0) == 0);
  std::filesystem::remove_all(dir);

  CHECK(run({"--format", "png", "limitset", data("genus2_classical.json")}).code == cli::kExitBadInput);
  CHECK(run({"limitset", data("noded_genus2.json")}).code == cli::kExitFail);
}

TEST_CASE("certify") {
  const auto slope = run({"certify", "slope", "--theta", "pi/4"});
  CHECK(slope.code == 0);
  CHECK(json::parse(slope.out)["verdict"] == "pass");
  CHECK(run({"certify", "slope", "--theta", "pi/6"}).code == 1);
  CHECK(run({"certify", "slope", "--theta", "0"}).code == 2);

  const auto gap = run({"certify", "cusp-gap", "--alpha", "2", "--y1", "0", "--y2", "0.3"});
  CHECK(gap.code == 1);
  const auto good = run({"certify", "cusp-gap", "--y1", "0", "--y2", "1"});
  CHECK(good.code == 0);
  const json gj = json::parse(good.out);
  CHECK(gj["details"]["y1_is_enumerated_cusp"] == true);
  CHECK(gj["details"]["y2_is_enumerated_cusp"] == true);
  CHECK(run({"certify", "cusp-gap", "--y1", "1", "--y2", "1"}).code == 2);

  const auto cr = run({"certify", "crossratio", "--points", "0", "inf", "3+4i", "-i", "--threshold", "1/8"});
  CHECK(cr.code == 0);
  CHECK(json::parse(cr.out)["value"].get<double>() == doctest::Approx(3));
  CHECK(run({"certify", "crossratio", "--points", "1", "-1", "i", "-i"}).code == 1);
  CHECK(run({"certify", "crossratio", "--points", "1", "-1", "i"}).code == 2);
  CHECK(run({"certify", "slope", "--theta", "-pi/3"}).code == 0);
  CHECK(run({"--depth", "-1", "limitset", data("genus2_classical.json")}).code == 2);

  CHECK(run({"certify", "suffcomp", "--theta", "pi/2", "--rho", "1", "--z4", "0.1+0.3i", "--z4p", "0.35+0.3i"}).code == 0);
  CHECK(run({"certify", "suffcomp", "--theta", "pi/2", "--rho", "1", "--z4", "0.1", "--z4p", "0.1"}).code == 2);
  CHECK(run({"certify"}).code == 2);
}

TEST_CASE("prove") {
  const auto cube = run({"prove", "cube"});
  CHECK(cube.code == 0);
  CHECK(json::parse(cube.out)["valid_count"] == 0);
  const auto ss = run({"prove", "superstrand"});
  CHECK(ss.code == 0);
  CHECK(json::parse(ss.out)["max_total"] == 10);
  const auto oct = run({"prove", "octahedron"});
  CHECK(oct.code == 0);
  CHECK(json::parse(oct.out)["iso_classes"] == 1);
  CHECK(run({"prove", "genus3"}).code == 0);
  CHECK(run({"prove", "sphere"}).code == 2);
}

TEST_CASE("words") {
  const auto fam = run({"words", "family", "3"});
  CHECK(fam.code == 0);
  CHECK(json::parse(fam.out)["length"] == 12);
  CHECK(run({"words", "family", "0"}).code == 2);
  const auto g3 = run({"words", "genus3"});
  CHECK(g3.code == 0);
  const json words = json::parse(g3.out)["words"];
  REQUIRE(words.size() == 3);
  CHECK(words[0]["length"] == 6);
  CHECK(words[1]["length"] == 4);
  CHECK(words[2]["length"] == 4);
  CHECK(run({"words", "check", data("words_conjugate.json")}).code == 1);
  CHECK(run({"words", "check", data("words_genus3.json")}).code == 0);
  CHECK(run({"words", "check", data("truncated.json")}).code == 2);
}

TEST_CASE("help and usage errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--mode", "noded", data("noded_genus2.json")},
      {"--depth", "4", "limitset", data("genus2_classical.json")},
      {"certify", "cusp-gap", "--y1", "0", "--y2", "1/2"},
      {"prove", "octahedron"},
      {"words", "check", data("words_genus3.json")}};
  for (const auto& cmd : commands) {
    const auto first = run(cmd), second = run(cmd);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}
