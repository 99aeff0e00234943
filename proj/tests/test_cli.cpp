#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(OBFOL_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WEXITSTATUS(st), out};
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/obfol_cli_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

const char* kDisc = R"({"schema":1,"genus":0,"boundary":1,"word":[]})";
const char* kAnnulusNeg =
    R"({"schema":1,"genus":0,"boundary":2,"word":[{"twist":"bdry_1","power":-1}]})";

}  // namespace

TEST_CASE("sl of the positive stabilized unknot") {
  std::string ob = tmp_file("disc.json", kDisc);
  std::string br = tmp_file("s1.json",
                            R"({"schema":1,"strands":2,"word":[{"gen":"s_1","power":1}]})");
  RunResult r = run("sl --openbook " + ob + " --braid " + br);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["sl"] == -1);
  CHECK(j["n"] == 2);
}

TEST_CASE("sl of the overtwisted annulus boundary") {
  std::string ob = tmp_file("ann.json", kAnnulusNeg);
  std::string br = tmp_file("r1.json",
                            R"({"schema":1,"strands":1,"word":[{"gen":"r_1","power":1}]})");
  RunResult r = run("sl --openbook " + ob + " --braid " + br);
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["sl"] == 1);
}

TEST_CASE("non-bounding braid classes exit with the domain code") {
  std::string ob = tmp_file("ann_id.json", R"({"schema":1,"genus":0,"boundary":2,"word":[]})");
  std::string br = tmp_file("r1b.json",
                            R"({"schema":1,"strands":1,"word":[{"gen":"r_1","power":1}]})");
  RunResult r = run("sl --openbook " + ob + " --braid " + br);
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["kind"] == "domain");
}

TEST_CASE("malformed input exits with the input code") {
  std::string ob = tmp_file("bad.json", "{not json");
  RunResult r = run("sl --openbook " + ob + " --braid " + ob);
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["kind"] == "input");
}

TEST_CASE("c and k subcommands") {
  std::string ob = tmp_file(
      "torus.json", R"({"schema":1,"genus":1,"boundary":1,"word":[{"twist":"a_1","power":1}]})");
  RunResult rc = run("c --openbook " + ob + " --a 0,1");
  CHECK(rc.exit_code == 0);
  CHECK(json::parse(rc.out)["c"] == 0);
  RunResult rk = run("k --openbook " + ob + " --a 0,1");
  CHECK(rk.exit_code == 0);
  CHECK(json::parse(rk.out)["k"] == 0);
}

TEST_CASE("movie-compile with follow-up reports") {
  std::string movie = std::string(OBF_SOURCE_DIR) + "/tests/data/ot_disc.movie";
  RunResult r = run("movie-compile " + movie + " --then chi");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["e_plus"] == 2);
  CHECK(j["e_minus"] == 1);
  CHECK(j["h_plus"] == 2);
  CHECK(j["h_minus"] == 0);
  CHECK(j["chi"] == 1);
  CHECK(j["sl"] == 1);

  RunResult ot = run("movie-compile " + movie + " --then ot-check");
  CHECK(json::parse(ot.out)["ot_disc"] == true);
  RunResult be = run("movie-compile " + movie + " --then be-check");
  CHECK(json::parse(be.out)["violated"] == true);
}

TEST_CASE("validate subcommand round-trips compiled output") {
  std::string movie = std::string(OBF_SOURCE_DIR) + "/tests/data/sphere_bb.movie";
  RunResult r = run("movie-compile " + movie);
  CHECK(r.exit_code == 0);
  json fs = json::parse(r.out);
  fs.erase("report");
  std::string fpath = tmp_file("sphere_fs.json", fs.dump());
  RunResult v = run("validate --foliation " + fpath);
  CHECK(v.exit_code == 0);
  CHECK(json::parse(v.out)["valid"] == true);
}

TEST_CASE("props subcommand runs a single suite") {
  RunResult r = run("props --suite annulus --seed 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["suites"]["annulus"]["failures"] == 0);
  CHECK(j["suites"]["annulus"]["cases"] == 200);
}

TEST_CASE("text output format") {
  std::string ob = tmp_file("disc2.json", kDisc);
  std::string br = tmp_file("s13.json",
                            R"({"schema":1,"strands":2,"word":[{"gen":"s_1","power":3}]})");
  RunResult r = run("sl --openbook " + ob + " --braid " + br + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("sl: 1") != std::string::npos);
}
