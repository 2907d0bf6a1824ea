#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string tmp_file(const char* tag) {
  return std::string("/tmp/suqsign_test_") + tag + ".out";
}

int run(const std::string& args, const std::string& out_file) {
  const std::string cmd = std::string(SUQSIGN_BIN) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("cli: decompose prints the constants line") {
  const std::string out = tmp_file("dec");
  REQUIRE(run("decompose \"(s2 s3 s4)(s3)(s2)(s1)\"", out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("t=4, i_min=2, j_min=2, j_max=4, i_0=1") != std::string::npos);
  CHECK(text.find("{2,3,4}") != std::string::npos);
}

TEST_CASE("cli: parse failures exit with 2") {
  const std::string out = tmp_file("bad");
  CHECK(run("decompose \"(sx)\"", out) == 2);
  CHECK(run("--omega \"(s1)\" moves 7 1", out) == 1);  // level out of range: runtime error
  CHECK(run("decompose \"(s9)\" --ell 4", out) == 2);
}

TEST_CASE("cli: identical configurations give byte-identical JSON") {
  const std::string a = tmp_file("det_a");
  const std::string b = tmp_file("det_b");
  const std::string args =
      "--omega \"(s1 s2)(s1)\" --n-max 3 --z-max 3 --json verify unitarity";
  REQUIRE(run(args, a) == 0);
  REQUIRE(run(args, b) == 0);
  const std::string ja = slurp(a);
  CHECK(!ja.empty());
  CHECK(ja == slurp(b));
  CHECK(ja.find("\"discrepancies\": []") != std::string::npos);
}

TEST_CASE("cli: sweep table matches the library golden file") {
  const std::string out = tmp_file("table1");
  REQUIRE(run("--omega \"(s2 s3 s4)(s3)(s2)(s1)\" sweep table1 --a 2 --b -1", out) == 0);
  CHECK(slurp(out) == slurp(std::string(SUQSIGN_GOLDEN_DIR) + "/table1.txt"));
}

TEST_CASE("cli: verdict exits 0 on the flagship word and on the degenerate one") {
  const std::string out = tmp_file("verdict");
  REQUIRE(run("--omega \"(s1 s2)(s1)\" --n-max 6 --z-max 6 --count 3 verdict", out) == 0);
  CHECK(slurp(out).find("all witnesses behave as predicted") != std::string::npos);
  REQUIRE(run("--omega \"(s1)\" verdict", out) == 0);
  CHECK(slurp(out).find("SU_q(2)") != std::string::npos);
}

TEST_CASE("cli: config file supplies defaults") {
  const std::string cfg = tmp_file("cfg_in");
  {
    std::ofstream f(cfg);
    f << "omega=\"(s1 s2)(s1)\"\nn-max=3\nz-max=3\n";
  }
  const std::string out = tmp_file("cfg");
  REQUIRE(run("--config " + cfg + " decompose", out) == 0);
  CHECK(slurp(out).find("t=2") != std::string::npos);
}
