// End-to-end tests of the command-line surface: exit codes, file outputs,
// result schemas, seed handling. The binary path comes in through
// ATTRALIGN_CLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "support/tmpdir.hpp"

using json = nlohmann::json;

namespace {

const auto kTmp = testtmp::dir("cli");

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = (kTmp / "stdout.txt").string();
  const std::string err_path = (kTmp / "stderr.txt").string();
  const std::string cmd = std::string(ATTRALIGN_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(raw);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::string path(const std::string& name) { return (kTmp / name).string(); }

}  // namespace

TEST_CASE("synth writes three files and is seed-deterministic") {
  const RunResult a = run("synth --seed 7 --out-prefix " + path("a"));
  REQUIRE(a.code == 0);
  const std::string edges1 = slurp(path("a.edges"));
  const std::string labels1 = slurp(path("a.labels"));
  const std::string attrs1 = slurp(path("a.attrs.csv"));
  CHECK(!edges1.empty());
  CHECK(!labels1.empty());
  CHECK(!attrs1.empty());

  const RunResult b = run("synth --seed 7 --out-prefix " + path("b"));
  REQUIRE(b.code == 0);
  CHECK(slurp(path("b.edges")) == edges1);
  CHECK(slurp(path("b.labels")) == labels1);
  CHECK(slurp(path("b.attrs.csv")) == attrs1);
}

TEST_CASE("synth validation failures exit with code 2") {
  const RunResult r = run("synth --p-in 1.5 --out-prefix " + path("bad"));
  CHECK(r.code == 2);
  CHECK(r.err.find("p_in") != std::string::npos);
}

TEST_CASE("missing input file exits with code 1") {
  const RunResult r = run("test --graph " + path("nope.edges") + " --labels " +
                          path("nope.labels") + " --seed 1");
  CHECK(r.code == 1);
}

TEST_CASE("test emits schema-stable JSON") {
  run("synth --seed 3 --out-prefix " + path("t"));
  const RunResult r = run("test --graph " + path("t.edges") + " --attrs " +
                          path("t.attrs.csv") + " --K 4 --l 100 --trials 50 --seed 5");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("n_trials") == 50);
  CHECK(j.at("sample_size") == 100);
  CHECK(j.at("seed") == 5);
  CHECK(j.at("entropies").size() == 50);
  CHECK(j.at("null_entropies").size() == 50);
  const double p = j.at("p_value").get<double>();
  CHECK(p >= 0.0);
  CHECK(p <= 1.0);
}

TEST_CASE("test with a constant partition warns and still reports") {
  run("synth --seed 3 --out-prefix " + path("c"));
  {
    std::ofstream flat(path("flat.labels"));
    for (int i = 0; i < 200; ++i) flat << 0 << "\n";
  }
  const RunResult r = run("test --graph " + path("c.edges") + " --labels " +
                          path("flat.labels") + " --l 50 --trials 10 --seed 2");
  REQUIRE(r.code == 0);
  CHECK(r.err.find("single class") != std::string::npos);
  const json j = json::parse(r.out);
  CHECK(!j.at("warnings").empty());
}

TEST_CASE("nmi on identical partitions prints 1") {
  {
    std::ofstream z(path("z1.labels"));
    z << "0\n0\n1\n1\n2\n";
  }
  const RunResult r = run("nmi " + path("z1.labels") + " " + path("z1.labels"));
  REQUIRE(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(1.0));
}

TEST_CASE("knn on three collinear points yields the two-edge path") {
  {
    std::ofstream csv(path("three.csv"));
    csv << "0\n1\n10\n";
  }
  const RunResult r =
      run("knn --attrs " + path("three.csv") + " --k 1 --out " + path("three.edges"));
  REQUIRE(r.code == 0);
  const std::string edges = slurp(path("three.edges"));
  CHECK(edges.find("0 1 1") != std::string::npos);
  CHECK(edges.find("1 2 1") != std::string::npos);
}

TEST_CASE("bestest reports the blockmodel entropy of two cliques") {
  {
    std::ofstream e(path("cliques.edges"));
    e << "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n";
    std::ofstream z(path("cliques.labels"));
    z << "0\n0\n0\n1\n1\n1\n";
  }
  const RunResult r = run("bestest --graph " + path("cliques.edges") + " --labels " +
                          path("cliques.labels") + " --perms 50 --seed 4");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  // -1/2 * 2 * [6 ln(2/3) + 3 ln(1/3)]
  CHECK(j.at("entropy").get<double>() == doctest::Approx(5.728627514653316));
  CHECK(j.at("n_perms") == 50);
}

TEST_CASE("louvain writes a partition of the right length") {
  run("synth --seed 9 --out-prefix " + path("l"));
  const RunResult r = run("louvain --graph " + path("l.edges") + " --seed 1 --out " +
                          path("l.louvain"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("communities:") != std::string::npos);
  int count = 0;
  std::ifstream z(path("l.louvain"));
  std::string line;
  while (std::getline(z, line)) {
    if (!line.empty()) ++count;
  }
  CHECK(count == 200);
}

TEST_CASE("experiment perturb emits the fixed CSV header") {
  const RunResult r = run(
      "experiment perturb --fractions 0.0,1.0 --trials 20 --l 100 --seed 6 --out " +
      path("perturb.csv"));
  REQUIRE(r.code == 0);
  const std::string csv = slurp(path("perturb.csv"));
  CHECK(csv.find("# schema_version=1 kind=perturb seed=6") == 0);
  CHECK(csv.find("fraction,mean_entropy,p_value,bestest_entropy\n") != std::string::npos);
  int lines = 0;
  for (char c : csv) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 4);  // comment + header + 2 rows
}

TEST_CASE("experiment markers emits one row per column") {
  {
    std::ofstream csv(path("mk.csv"));
    // Two clusters of 30 over 4 columns; column 3 is noise.
    for (int i = 0; i < 60; ++i) {
      const double base = i < 30 ? 0.0 : 12.0;
      csv << base + 0.1 * ((i * 7) % 10) << "," << base + 0.1 * ((i * 3) % 10) << ","
          << base + 0.1 * ((i * 5) % 10) << "," << 0.01 * ((i * 11) % 100) << "\n";
    }
  }
  const RunResult r = run("experiment markers --attrs " + path("mk.csv") +
                          " --k 3 --l 30 --trials 10 --seed 2 --out " + path("mk_out.csv"));
  REQUIRE(r.code == 0);
  const std::string csv = slurp(path("mk_out.csv"));
  CHECK(csv.find("marker_index,nmi,p_value\n") != std::string::npos);
  int rows = 0;
  for (char c : csv) {
    if (c == '\n') ++rows;
  }
  CHECK(rows == 2 + 4);  // comment + header + one row per column
}

TEST_CASE("ATTRALIGN_SEED is honored when --seed is omitted") {
  setenv("ATTRALIGN_SEED", "7", 1);
  const RunResult a = run("synth --out-prefix " + path("env"));
  unsetenv("ATTRALIGN_SEED");
  REQUIRE(a.code == 0);
  CHECK(slurp(path("env.edges")) == slurp(path("a.edges")));  // same as --seed 7
}

TEST_CASE("omitting the seed draws one from entropy and prints it") {
  const RunResult r = run("louvain --graph " + path("a.edges"));
  REQUIRE(r.code == 0);
  CHECK(r.err.find("seed:") != std::string::npos);
}
