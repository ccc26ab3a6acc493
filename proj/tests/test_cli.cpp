#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "sdual/cli.hpp"
#include "sdual/fixtures.hpp"

using namespace sdual;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run_binary(const std::vector<std::string>& args) {
  std::string cmd = SDUAL_TOOL_PATH;
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

int dot_vertices(const std::string& dot) {
  static const std::regex vertex(R"(^\s+v\d+ \[)");
  std::istringstream in(dot);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += std::regex_search(line, vertex);
  return n;
}

std::string write_temp(const std::string& name, const json& j) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_CASE("classify") {
  auto r = run({"--json", "classify", "x^3+x*y^6+z^2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["family"] == "IIA (2,3,18)");
  CHECK(j["gorenstein"] == 1);
  CHECK(j["reduced_weights"] == "(6,2,9;18)");

  auto fermat = json::parse(run({"--json", "classify", "x^2+y^2+z^2"}).out);
  CHECK(fermat["family"] == "I (2,2,2)");
  CHECK(fermat["listed"] == false);
  CHECK(run({"classify", "x^2+y^3+z^5"}).code == 2);
  CHECK(run({"classify", "x^2+y^3"}).code == 2);
  CHECK(run({"classify", "x^2+"}).code == 2);
}

TEST_CASE("dualize") {
  auto r = run({"--json", "dualize", "IIA 2 3 18"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["h"] == "x^2*y^3 - y^4*z + x^3 + z^2");
  CHECK(j["dolgachev"]["h"] == "2,2;2,3");
  CHECK(j["gabrielov"]["h"] == "2,3,10");
  CHECK(j["gabrielov"]["icis"] == "2,2;2,3");
  CHECK(j["pair_weights"] == "(10,6,9,8;16,18)");
  CHECK(json::parse(run({"--json", "dualize", "IIB 6 2 8"}).out)["duality_pass"] == true);
  CHECK(run({"dualize", "IIA 2 3 19"}).code == 2);
  CHECK(run({"dualize", "XX 1 2 3"}).code == 2);
}

TEST_CASE("virtual, weights, poincare and zeta") {
  auto v = json::parse(run({"--json", "virtual", "IIA 2 3 18"}).out);
  CHECK(v["h1"].get<std::string>().find("y^4*z") != std::string::npos);
  CHECK(v["in_regime"] == true);
  CHECK(run({"virtual", "I 4 2 3"}).code == 2);

  auto w = json::parse(run({"--json", "weights", "IIA 2 3 18"}).out);
  CHECK(w["group_order"] == 36);
  CHECK(w["grading_index"] == 2);
  CHECK(w["c_f"] == 2);

  auto p = json::parse(run({"--json", "poincare", "--terms", "5", "IIA 2 3 18"}).out);
  CHECK(p["series"].size() == 6);
  CHECK(p["dolgachev_icis"].get<std::string>().size() > 0);

  auto z = json::parse(run({"--json", "zeta", "IIA 2 3 18"}).out);
  CHECK(z["pass"] == true);
  CHECK(z["milnor_number"] == 15);
  auto q = json::parse(run({"--json", "zeta", "--poly", "x^2+y^3+z^7"}).out);
  CHECK(q["degree"] == 12);
  CHECK(run({"zeta"}).code == 2);
}

TEST_CASE("enumerate") {
  auto one = json::parse(run({"--json", "enumerate", "1", "--bound", "24"}).out);
  CHECK(one["count"] == 11);
  auto zero = json::parse(run({"--json", "enumerate", "0", "--bound", "30"}).out);
  CHECK(zero["count"] == 0);
  auto neg = json::parse(run({"--json", "enumerate", "-1", "--bound", "8"}).out);
  CHECK(neg["count"] == 7);
}

TEST_CASE("verify scopes") {
  auto t = run({"verify", "tables", "--grid-bound", "24"});
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS tables") != std::string::npos);
  CHECK(run({"verify", "duality", "--grid-bound", "20"}).code == 0);
  CHECK(run({"verify", "zeta", "--grid-bound", "20"}).code == 0);
  CHECK(run({"verify", "calibration"}).code == 0);
  CHECK(run({"verify", "bimodal"}).code == 0);
  CHECK(run({"verify", "enumeration", "--grid-bound", "30"}).code == 0);
  CHECK(run({"verify", "duality", "--family", "IIB 6 2 8"}).code == 0);
  auto j = json::parse(run({"--json", "verify", "zeta", "--grid-bound", "12"}).out);
  CHECK(j["suites"][0]["detail"]["names"].size() == 8);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "bimodal", "--name", "X_{99}"}).code == 2);
}

TEST_CASE("negative controls") {
  json data = active_fixtures().data();
  data["invariants_f"][1]["dolgachev"][0] = "p1+1";
  auto path = write_temp("sdual_mutated_invariants.json", data);
  CHECK(run({"--fixtures", path, "verify", "tables", "--grid-bound", "24"}).code == 3);
  CHECK(run({"verify", "tables", "--grid-bound", "24"}).code == 0);

  CHECK(run({"verify", "bimodal", "--name", "J_{3,-1}", "--family", "IIA 2 3 19"}).code == 3);
  CHECK(run({"verify", "zeta", "--name", "J_{3,-1}", "--family", "IIA 2 3 30"}).code == 3);
  CHECK(run({"--fixtures", "/nonexistent/fixtures.json", "verify", "tables"}).code == 2);
}

TEST_CASE("dynkin export") {
  auto e = run({"dynkin", "J_{3,-1}"});
  REQUIRE(e.code == 0);
  CHECK(dot_vertices(e.out) == 15);
  CHECK(e.out.rfind("graph ", 0) == 0);
  CHECK(dot_vertices(run({"dynkin", "--presentation", "spqr", "2,3,10"}).out) == 15);
  CHECK(dot_vertices(run({"dynkin", "--presentation", "pi", "2,2,2,3"}).out) == 10);
  auto j = json::parse(run({"dynkin", "--format", "json", "--presentation", "spqr", "2,3,10"}).out);
  CHECK(j["size"] == 15);
  CHECK(run({"dynkin", "--presentation", "pi", "2,2,3"}).code == 2);
  CHECK(run({"dynkin", "X_{9}"}).code == 2);

  auto path = (std::filesystem::temp_directory_path() / "sdual_j3.dot").string();
  CHECK(run({"dynkin", "J_{3,-1}", "-o", path}).code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == e.out);
}

TEST_CASE("binary exit codes and determinism") {
  auto a = run_binary({"--json", "--jobs", "1", "verify", "tables", "--grid-bound", "20"});
  auto b = run_binary({"--json", "--jobs", "4", "verify", "tables", "--grid-bound", "20"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run_binary({"classify", "x^3+x*y^6+z^2"}).out == run_binary({"classify", "x^3+x*y^6+z^2"}).out);
  CHECK(run_binary({"classify", "x^2+y^3+z^5"}).code == 2);
  CHECK(run_binary({"--help"}).code == 0);
  CHECK(run_binary({}).code == 2);
  CHECK(run_binary({"--bogus"}).code == 2);
  CHECK(dot_vertices(run_binary({"dynkin", "--presentation", "pi", "2,2,2,3"}).out) == 10);
}
