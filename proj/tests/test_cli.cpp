#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// End-to-end checks of the command-line binary: exit codes and output shape.

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string out_file = "/tmp/nlbs_cli_test_out.txt";
  const std::string cmd =
      std::string(NLBS_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  result.out = ss.str();
  std::remove(out_file.c_str());
  return result;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("catalog list") {
  const CliResult all = run_cli("catalog list");
  CHECK(all.code == 0);
  CHECK(count_lines(all.out) == 29);  // header + 28 families

  const CliResult t2 = run_cli("catalog list --table T2");
  CHECK(t2.code == 0);
  CHECK(count_lines(t2.out) == 11);

  const CliResult eq6 = run_cli("catalog list --table EQ6");
  CHECK(eq6.code == 0);
  CHECK(count_lines(eq6.out) == 2);
  CHECK(eq6.out.find("unsolved-template") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --family T2.5 --c1 1 --c2 0 --delta -1").code == 0);
  CHECK(run_cli("verify --family T2.1 --c1 0").code == 0);
  const CliResult bad = run_cli("verify --family T2.7 --eps 1 --k 0.7");
  CHECK(bad.code == 2);
  // pinned-sign rows work without an explicit --eps
  CHECK(run_cli("verify --family T2.9 --k 0.5 --c1 0.2 --c2 0.1").code == 0);
  CHECK(run_cli("verify --family T4.1 --a 2 --b 1 --c 1 --c1 0.5 --c2 1").code == 0);
}

TEST_CASE("transform output and errors") {
  const CliResult fwd = run_cli("transform --forward --a 2 --b 1 --c 0 --t 0 --x 1 --u 0");
  CHECK(fwd.code == 0);
  CHECK(fwd.out.substr(0, 5) == "0 0 0");

  const CliResult checked =
      run_cli("transform --forward --a 2 --b 1 --c 1 --t 0.4 --x 1.7 --u 2 --check");
  CHECK(checked.code == 0);
  CHECK(checked.out.find("round-trip residual") != std::string::npos);

  CHECK(run_cli("transform --forward --t 0 --x 0 --u 0").code == 2);
}

TEST_CASE("symmetry subcommands") {
  const CliResult comm = run_cli("symmetry commutators");
  CHECK(comm.code == 0);
  CHECK(count_lines(comm.out) == 6);  // header + X1..X5

  const CliResult opt = run_cli("symmetry optimal-system");
  CHECK(opt.code == 0);
  CHECK(count_lines(opt.out) == 15);  // header + 14 subalgebras

  CHECK(run_cli("symmetry certify --gen X5 --family T2.5 --s 0.7 --c1 1").code == 0);
}

TEST_CASE("reduce exit codes") {
  CHECK(run_cli("reduce --row 6 --eps 1").code == 4);
  CHECK(run_cli("reduce --row 3 --eps 1 --against-family T2.3 --c1 0.3 --c2 1 "
                "--delta 1 --xi0 0 --xi1 1")
            .code == 0);
  const CliResult subst =
      run_cli("reduce --row 9 --phi0 1 --dphi0 0.5 --sigma 1 --check ode12");
  CHECK(subst.code == 0);
  CHECK(subst.out.find("z") != std::string::npos);
}

TEST_CASE("taylor sweep") {
  const CliResult rf = run_cli("taylor --kind reduced-form --rho 1e-2,5e-3,2.5e-3");
  CHECK(rf.code == 0);
  CHECK(count_lines(rf.out) == 4);

  CHECK(run_cli("taylor --kind transaction-cost --rho 1e-2,5e-3").code == 0);
  // denominator pole: 1 - rho uS - rho S uSS = 1 - 0.5 - 0.5 = 0
  CHECK(run_cli("taylor --kind equilibrium --rho 0.25 --S 1 --uS 2 --uSS 2").code == 2);
}

TEST_CASE("config file with flag override") {
  const std::string path = "/tmp/nlbs_cli_test_cfg.ini";
  {
    std::ofstream cfg(path);
    cfg << "[model]\na = 2\nb = 1\nc = 0\n[family]\nid = T2.5\nc1 = 1\nc2 = 0\n"
           "delta = -1\n[tolerances]\ntol = 1e-9\n";
  }
  CHECK(run_cli("verify --config " + path).code == 0);
  // flag overrides the file: an invalid k for row 7 must now fail
  CHECK(run_cli("verify --config " + path + " --family T2.7 --eps 1 --k 0.7").code == 2);
  std::remove(path.c_str());

  CHECK(run_cli("verify --config /nonexistent.ini --family T2.1").code == 2);
}

TEST_CASE("csv output goes to --out") {
  const std::string path = "/tmp/nlbs_cli_test_csv.csv";
  CHECK(run_cli("catalog list --out " + path).code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "family_id,constants_used,domain_description,owning_equation");
  std::remove(path.c_str());
}
