#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the binary named by ISOPERIM_CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const char* exe = std::getenv("ISOPERIM_CLI");
  REQUIRE_MESSAGE(exe != nullptr, "ISOPERIM_CLI must point at the binary");
  const std::string cmd = std::string(exe) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    r.out.append(buf, n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << contents;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("analyze --help").code == 0);
}

TEST_CASE("analyze inline circle") {
  const auto r = run_cli("analyze circle r=1");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  const json rep = json::parse(lines[0]);
  CHECK(rep.at("chain_ok").get<bool>());
  CHECK(rep.at("ratio").get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(rep.at("L").get<double>() ==
        doctest::Approx(6.283185307179586).epsilon(1e-10));
}

TEST_CASE("analyze a batch file in both formats") {
  const auto path = temp_file("isoperim_cli_batch.json", R"([
    {"kind": "circle",  "params": {"r": 0.5},          "id": "small-circle"},
    {"kind": "ellipse", "params": {"a": 2, "b": 1},    "id": "egg"}
  ])");

  const auto njson = run_cli("analyze " + path.string());
  REQUIRE(njson.code == 0);
  const auto jlines = lines_of(njson.out);
  REQUIRE(jlines.size() == 2);
  CHECK(json::parse(jlines[0]).at("curve").get<std::string>() ==
        "small-circle");
  CHECK(json::parse(jlines[1]).at("curve").get<std::string>() == "egg");

  const auto csv = run_cli("analyze " + path.string() + " --format csv");
  REQUIRE(csv.code == 0);
  const auto clines = lines_of(csv.out);
  REQUIRE(clines.size() == 3);
  CHECK(clines[0] == "curve_id,L,A,ratio,deficit,chain_ok");
  CHECK(clines[1].rfind("small-circle,", 0) == 0);
  CHECK(clines[2].rfind("egg,", 0) == 0);

  std::filesystem::remove(path);
}

TEST_CASE("analyze --spec and --out") {
  const auto out_path =
      std::filesystem::temp_directory_path() / "isoperim_cli_report.json";
  const auto r = run_cli(
      "analyze --spec '{\"kind\":\"circle\",\"params\":{\"r\":3}}' --out " +
      out_path.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  std::string line;
  REQUIRE(std::getline(f, line));
  CHECK(json::parse(line).at("chain_ok").get<bool>());
  std::filesystem::remove(out_path);
}

TEST_CASE("orthogonality csv output") {
  const auto r = run_cli("orthogonality --order 4 --format csv");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 3 * 4 * 4);
  CHECK(lines[0] == "kind,n,m,computed,expected,residual");

  // an impossible threshold flags a violation through the exit code
  CHECK(run_cli("orthogonality --order 4 --tol 1e-18 --out /dev/null").code ==
        2);
}

TEST_CASE("parseval on a file and on a seeded random series") {
  const auto path = temp_file("isoperim_cli_coeffs.json",
                              R"({"a0": 0, "a": [0.6], "b": [-0.8]})");
  const auto r = run_cli("parseval " + path.string());
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(json::parse(lines[0]).at("residual").get<double>() <= 1e-10);
  CHECK(json::parse(lines[1]).at("deriv_parseval").at("residual").get<double>() <=
        1e-9);
  CHECK(!json::parse(lines[2]).at("equality_witness").is_null());
  std::filesystem::remove(path);

  const auto rnd = run_cli("parseval --seed 42 --order 16");
  REQUIRE(rnd.code == 0);
  CHECK(rnd.out.find("\"wirtinger\":null") != std::string::npos);
  CHECK(rnd.out.find("notice") != std::string::npos);
}

TEST_CASE("reparam tabulates the unit-speed curve") {
  const auto r = run_cli("reparam circle r=1 --grid 16 --format csv");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 17);
  CHECK(lines[0] == "theta,f,g,df,dg");

  const auto j = run_cli("reparam ellipse a=2 b=1 --grid 8");
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("theta").size() == 8);
  CHECK(doc.at("arc_constraint_residual").get<double>() <= 1e-6);
}

TEST_CASE("random suite is deterministic and passes") {
  const auto a = run_cli("random-suite --seed 7 --count 3");
  const auto b = run_cli("random-suite --seed 7 --count 3");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("result: PASS") != std::string::npos);
  CHECK(a.out.find("chain_ok: 3/3") != std::string::npos);

  const auto c = run_cli("random-suite --seed 8 --count 3");
  CHECK(c.out != a.out);  // the seed actually matters
}

TEST_CASE("bad input exits 1 with a useful message") {
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("analyze").code == 1);

  const auto missing = run_cli("analyze nosuch.json");
  CHECK(missing.code == 1);
  CHECK(missing.out.find("nosuch.json") != std::string::npos);

  const auto noparam = run_cli("analyze circle");
  CHECK(noparam.code == 1);
  CHECK(noparam.out.find("\"r\"") != std::string::npos);

  const auto badjson = run_cli("analyze --spec '{\"kind\":}'");
  CHECK(badjson.code == 1);

  const auto badvalue = run_cli("analyze circle r=abc");
  CHECK(badvalue.code == 1);
  CHECK(badvalue.out.find("r=abc") != std::string::npos);

  CHECK(run_cli("analyze --order 0 circle r=1").code == 1);
}

}  // TEST_SUITE
