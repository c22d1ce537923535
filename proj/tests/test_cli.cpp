#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct CommandResult {
  int exit_code;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(SYMBREAK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("cli product and skeleton round trip through files") {
  write_file("/tmp/symbreak_k2.el", "2 1\n0 1\n");
  write_file("/tmp/symbreak_k3.el", "3 3\n0 1\n1 2\n0 2\n");

  auto prod = run_cli("product --kind kron /tmp/symbreak_k2.el /tmp/symbreak_k3.el");
  CHECK(prod.exit_code == 0);
  CHECK(prod.output.substr(0, 4) == "6 6\n");

  auto cart = run_cli("product --kind cart /tmp/symbreak_k2.el /tmp/symbreak_k3.el");
  CHECK(cart.exit_code == 0);
  CHECK(cart.output.substr(0, 4) == "6 9\n");

  auto skel = run_cli("skeleton /tmp/symbreak_k2.el");
  CHECK(skel.exit_code == 0);
  CHECK(skel.output == "2 0\n");
}

TEST_CASE("cli graph6 input") {
  write_file("/tmp/symbreak_k4.g6", "C~\n");
  auto aut = run_cli("--format graph6 aut /tmp/symbreak_k4.g6");
  CHECK(aut.exit_code == 0);
  CHECK(aut.output.find("order 24") != std::string::npos);
}

TEST_CASE("cli solver subcommands") {
  write_file("/tmp/symbreak_c5.el", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  auto dnum = run_cli("dnum /tmp/symbreak_c5.el");
  CHECK(dnum.exit_code == 0);
  CHECK(dnum.output.find("distinguishing_number 3") != std::string::npos);
  CHECK(dnum.output.find("exact true") != std::string::npos);

  auto dindex = run_cli("dindex /tmp/symbreak_c5.el");
  CHECK(dindex.exit_code == 0);
  CHECK(dindex.output.find("distinguishing_index 3") != std::string::npos);
}

TEST_CASE("cli families") {
  CHECK(run_cli("families kron-complete 2 4").output == "exact 3\n");
  CHECK(run_cli("families kron-complete 2 3").output == "interval {2,3}\n");
  CHECK(run_cli("families dprime-k2-power 4").output == "exact 8\n");
  CHECK(run_cli("families dprime-bipartite-upper 8 3").output == "upper_bound 3\n");
  CHECK(run_cli("families complete-multipartite 3 2").output == "exact 4\n");
  auto bad = run_cli("families kron-complete 1 1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("").exit_code == 2);             // missing subcommand
  CHECK(run_cli("nosuchcmd").exit_code != 0);    // unknown subcommand
  write_file("/tmp/symbreak_bad.el", "2 1\n0 7\n");
  CHECK(run_cli("dnum /tmp/symbreak_bad.el").exit_code == 2);
  CHECK(run_cli("verify --suite nosuch").exit_code == 2);
}

TEST_CASE("cli verify reports are byte stable") {
  auto a = run_cli("verify --suite k2power --seed 11 --report /tmp/symbreak_r1.jsonl");
  auto b = run_cli("verify --suite k2power --seed 11 --report /tmp/symbreak_r2.jsonl");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  std::ifstream f1("/tmp/symbreak_r1.jsonl"), f2("/tmp/symbreak_r2.jsonl");
  std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(!s1.empty());
  CHECK(s1 == s2);
  CHECK(s1.find("\"status\":\"pass\"") != std::string::npos);
}
