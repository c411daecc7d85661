// End-to-end tests of the command-line tool: exit codes, report lines,
// golden files, determinism, and output composability.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(MONOCAT_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) {
  return std::string(MONOCAT_DATA_DIR) + "/" + name;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(MONOCAT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST_SUITE("cli") {

TEST_CASE("exit codes follow the three-way contract") {
  const auto pass = run_cli("verify " + data("m3.mon"));
  CHECK(pass.exit_code == 0);
  CHECK(pass.output == "CHECK monoid PASS\n");

  const auto fail = run_cli("verify " + data("broken_unit.mon"));
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("CHECK monoid FAIL") != std::string::npos);

  const auto garbage = run_cli("verify " + data("garbage.txt"));
  CHECK(garbage.exit_code == 2);
  CHECK(garbage.output.empty());
}

TEST_CASE("verify handles categories") {
  const auto result = run_cli("verify " + data("k2.cat"));
  CHECK(result.exit_code == 0);
  CHECK(result.output == "CHECK category PASS\n");
}

TEST_CASE("output is byte-deterministic") {
  const auto once = run_cli("search --order 3");
  const auto twice = run_cli("search --order 3");
  CHECK(once.output == twice.output);
  CHECK(once.exit_code == 0);
}

TEST_CASE("search finds associative non-prime ideals at order three") {
  const auto result = run_cli("search --order 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("ASSOC_NOT_PRIME") != std::string::npos);
}

TEST_CASE("ideals classifies the M3 ideals") {
  const auto result = run_cli("ideals " + data("m3.mon"));
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "IDEAL 0 NOT_PRIME WEAK_SIMPLE\n"
        "IDEAL a,0 PRIME WEAK_SIMPLE\n"
        "FOUND 2\n");

  const auto strict = run_cli("ideals " + data("m3.mon") +
                              " --unit-witness forbid");
  CHECK(strict.exit_code == 0);
  CHECK(strict.output.find("IDEAL 0 NOT_PRIME NOT_WEAK_SIMPLE a") !=
        std::string::npos);
}

TEST_CASE("quotient emits a loadable monoid file") {
  const auto result = run_cli("quotient " + data("m4.mon") + " --ideal big");
  CHECK(result.exit_code == 0);
  CHECK(result.output == read_golden("quotient_m4.txt"));

  // Feed the printed monoid back through verify.
  const std::string tmp = "/tmp/monocat_quotient.mon";
  {
    std::ofstream out(tmp);
    std::istringstream in(result.output);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') {
        out << line << "\n";
      }
    }
  }
  const auto reverify = run_cli("verify " + tmp);
  CHECK(reverify.exit_code == 0);
}

TEST_CASE("quotient refuses a non-associative ideal with exit 1") {
  const auto result = run_cli("quotient " + data("m4.mon") + " --ideal top");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("CHECK associative-ideal FAIL witness (a,a,a)") !=
        std::string::npos);
}

TEST_CASE("pushout passes for M3 over the small corpus") {
  const auto result = run_cli("pushout " + data("m3.mon") +
                              " --ideal zero --corpus-order 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("CHECK square-commutes PASS") != std::string::npos);
  CHECK(result.output.find("CHECK pushout PASS") != std::string::npos);
}

TEST_CASE("to-monoid output verifies and chains into to-category") {
  const auto result = run_cli("to-monoid " + data("k2.cat"));
  CHECK(result.exit_code == 0);
  CHECK(result.output == read_golden("to_monoid_k2.txt"));

  const std::string tmp = "/tmp/monocat_k2_completed.mon";
  {
    std::ofstream out(tmp);
    out << result.output;
  }
  const auto back = run_cli("to-category " + tmp + " --ideal zero");
  CHECK(back.exit_code == 0);
  CHECK(back.output.find("objects idA idB") != std::string::npos);
  CHECK(back.output.find("arrow f idA idB") != std::string::npos);
}

TEST_CASE("to-category diagnoses M3 and exits 1") {
  const auto result = run_cli("to-category " + data("m3.mon") + " --ideal zero");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("DIAGNOSIS 'a' has no left local unit") !=
        std::string::npos);
}

TEST_CASE("roundtrip reports OK for K2 and WEAK for M3") {
  const auto k2 = run_cli("roundtrip " + data("k2.cat"));
  CHECK(k2.exit_code == 0);
  CHECK(k2.output == "ROUNDTRIP K2 OK\n");

  const auto m3 = run_cli("roundtrip " + data("m3.mon"));
  CHECK(m3.exit_code == 0);
  CHECK(m3.output.find("ROUNDTRIP M3 WEAK") != std::string::npos);

  const auto both = run_cli("roundtrip " + data("k2.cat") + " " +
                            data("chain3.cat"));
  CHECK(both.exit_code == 0);
  CHECK(both.output == "ROUNDTRIP K2 OK\nROUNDTRIP Chain3 OK\n");
}

TEST_CASE("chains output matches the golden file") {
  const auto result = run_cli("chains " + data("alternating.rel") +
                              " --max-len 3");
  CHECK(result.exit_code == 0);
  CHECK(result.output == read_golden("chains_alternating.txt"));
}

TEST_CASE("chains classifies the forbidden-factor ideal") {
  const auto result = run_cli("chains " + data("forbid_ab.rel") +
                              " --max-len 6");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("CHECK ideal-associative PASS") != std::string::npos);
  CHECK(result.output.find("IDEAL not-prime ('a','b')") != std::string::npos);
}

TEST_CASE("localize matches the golden file") {
  const auto result = run_cli("localize " + data("monoid_axioms.ax"));
  CHECK(result.exit_code == 0);
  CHECK(result.output == read_golden("localize_monoid.txt"));
}

TEST_CASE("localize can compare the literal pairing") {
  const auto result = run_cli("localize " + data("monoid_axioms.ax") +
                              " --reading literal");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("ex(x, y) and ex(x, z) and ex(y, z) implies") !=
        std::string::npos);
}

TEST_CASE("the report can be written to a file") {
  const std::string tmp = "/tmp/monocat_report.txt";
  const auto result = run_cli("--output " + tmp + " verify " + data("m3.mon"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.empty());
  std::ifstream in(tmp);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == "CHECK monoid PASS\n");
}

TEST_CASE("localize with full trace lists the rewrites") {
  const auto result = run_cli("localize " + data("monoid_axioms.ax") +
                              " --format full-trace");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("TRACE 1 constant e0 => tau2_e0(x)") !=
        std::string::npos);
}

TEST_CASE("model-check reports the unit terms for M3") {
  const auto result = run_cli("model-check " + data("m3.mon") + " --ideal zero");
  CHECK(result.exit_code == 0);
  CHECK(result.output == read_golden("model_check_m3.txt"));
}

TEST_CASE("a missing ideal name is a structural error") {
  const auto result = run_cli("quotient " + data("m3.mon") + " --ideal nope");
  CHECK(result.exit_code == 2);
}

}  // TEST_SUITE

}  // namespace
