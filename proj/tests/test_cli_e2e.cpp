// Spawns the real CLI binary and checks exit codes, file outputs, and
// rerun reproducibility end to end.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DSC_CLI_PATH
#error "DSC_CLI_PATH must point at the CLI binary"
#endif

namespace {

int run(const std::string& args) {
  const std::string command = std::string("\"") + DSC_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(command.c_str());
  REQUIRE(raw != -1);
  return WEXITSTATUS(raw);
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("cli_e2e_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("help and bad flags") {
  CHECK(run("--help") == 0);
  CHECK(run("bounds --definitely-not-a-flag") == 2);
  CHECK(run("") == 2);  // a subcommand is required
}

TEST_CASE("bounds sweep is byte-stable across reruns") {
  TempFile csv("bounds.csv");
  const std::string args =
      "bounds --pd 0.01 0.02 --ps 0.01 --n 10000 100000 --delta 0.5 --out " + csv.path;
  REQUIRE(run(args) == 0);
  const std::string first = slurp(csv.path);
  CHECK(first.rfind("n,pd,ps,delta,gamma,", 0) == 0);
  CHECK(first.find(",ok\n") != std::string::npos);
  REQUIRE(run(args + " --jobs 4") == 0);
  CHECK(slurp(csv.path) == first);
  CHECK(run("bounds --ps 0.01 --n 100 --out " + csv.path) == 2);  // missing --pd
}

TEST_CASE("verify exit codes") {
  const std::string small =
      "verify --collision-max-n 3 --confusable-max-n 3 --tsbad-max-n 3 --guesser-codebooks 2";
  CHECK(run(small) == 0);
  CHECK(run(small + " --test-corrupt-confusable -50") == 1);
  CHECK(run("verify --collision-max-n 0 --confusable-max-n 0 --tsbad-max-n 0 "
            "--guesser-codebooks 0") == 2);
}

TEST_CASE("variant flags reach the evaluators") {
  TempFile proof("variant_proof.txt"), statement("variant_statement.txt");
  const std::string base = "decode --n 10 --codebook-size 8 --qd 1 --qs 1 --trials 500 --seed 5";
  REQUIRE(run(base + " --out " + proof.path) == 0);
  REQUIRE(run(base + " --t-variant statement --out " + statement.path) == 0);
  CHECK(slurp(proof.path) != slurp(statement.path));  // the ceiling moved
  CHECK(run("decode --t-variant bogus") == 2);
}

TEST_CASE("decode summary is reproducible for a fixed seed") {
  TempFile summary("decode.txt"), trials("decode.csv");
  const std::string args = "decode --n 10 --codebook-size 8 --qd 1 --qs 1 --trials 2000 "
                           "--seed 5 --out " +
                           summary.path + " --trials-csv " + trials.path;
  REQUIRE(run(args) == 0);
  const std::string first = slurp(summary.path);
  CHECK(first.find("delta_hat=") != std::string::npos);
  REQUIRE(run(args + " --jobs 3") == 0);
  CHECK(slurp(summary.path) == first);
  std::istringstream lines(slurp(trials.path));
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 2001);  // header + one row per trial
}

TEST_CASE("config file feeds flags, and flags win") {
  TempFile config("config.ini"), summary_a("cfg_a.txt"), summary_b("cfg_b.txt");
  {
    std::ofstream cfg(config.path);
    cfg << "seed=5\n"
        << "[decode]\n"
        << "n=10\n"
        << "codebook-size=8\n"
        << "qd=1\n"
        << "qs=1\n"
        << "trials=500\n";
  }
  REQUIRE(run("--config " + config.path + " decode --out " + summary_a.path) == 0);
  REQUIRE(run("decode --n 10 --codebook-size 8 --qd 1 --qs 1 --trials 500 --seed 5 --out " +
              summary_b.path) == 0);
  CHECK(slurp(summary_a.path) == slurp(summary_b.path));
  // a flag on the command line overrides the file
  REQUIRE(run("--config " + config.path + " decode --trials 200 --out " + summary_a.path) == 0);
  CHECK(slurp(summary_a.path).find("trials=200") != std::string::npos);
}

TEST_CASE("concentration and decompose") {
  TempFile report("concentration.txt");
  CHECK(run("concentration --n 1000 --p 0.1 --trials 5000 --delta 0.5 --out " + report.path) ==
        0);
  CHECK(slurp(report.path).find("pass_vs_bound=1") != std::string::npos);
  CHECK(run("decompose --n 4 --pd 0.3 --ps 0.2 --trials 5000") == 0);
  CHECK(run("decompose --n 4 --pd nonsense --ps 0.2 --trials 10") == 2);
}
