// End-to-end checks of the gpow binary: exit codes and output shape.
// Invoked as: cli_tests <path-to-gpow>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

std::string g_binary;
int g_failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// `input` is passed through printf, so backslash escapes like \n apply.
RunResult run(const std::string& args, const std::string& input = "") {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  if (!input.empty()) cmd = "printf '" + input + "' | " + cmd;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool cond, const std::string& what) {
  if (!cond) {
    std::cerr << "FAIL: " << what << "\n";
    ++g_failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-gpow>\n";
    return 2;
  }
  g_binary = argv[1];

  auto r = run("extremal --k 1 --validate");
  expect(r.exit_code == 0, "extremal --validate exit code");
  expect(r.out.find("v=11") != std::string::npos, "extremal table v=11");
  expect(r.out.find("e=22") != std::string::npos, "extremal table e=22");
  expect(r.out.find("e_cube=46") != std::string::npos, "extremal table e_cube=46");

  r = run("extremal --k 1");
  expect(r.exit_code == 0, "extremal emit exit code");
  expect(r.out.size() > 1 && r.out[0] == char(63 + 11), "extremal emits graph6 header n=11");

  r = run("check", "Ch\\n");
  expect(r.exit_code == 0, "check on P4 exit code");
  expect(r.out.find("\"lhs8\":48") != std::string::npos, "check lhs8=48");
  expect(r.out.find("\"rhs7dn\":28") != std::string::npos, "check rhs7dn=28");
  expect(r.out.find("\"status\":\"pass\"") != std::string::npos, "check pass status");

  r = run("power --k 3", "Ch\\n");
  expect(r.exit_code == 0, "power exit code");
  expect(r.out == "C~\n", "P4 cubed emits K4");

  r = run("certify", "Ch\\n");
  expect(r.exit_code == 0, "certify exit code");
  expect(r.out.find("\"pass\":true") != std::string::npos, "certificate passes");

  r = run("certify", "C~\\n");
  expect(r.exit_code == 2, "certify on K4 is a usage/input error (diameter < 3)");

  r = run("scan --n 4 --certify");
  expect(r.exit_code == 0, "scan n=4 exit code");
  expect(r.out.find("\"failed\":0") != std::string::npos, "scan n=4 zero failures");

  r = run("scan --n 9");
  expect(r.exit_code == 2, "scan n=9 gated");

  r = run("scan --n 8");
  expect(r.exit_code == 2, "scan n=8 needs --long-run");

  r = run("cayley --p 7 --set 1,6 --k 3");
  expect(r.exit_code == 0, "cayley exit code");
  expect(r.out.find("\"e_k\":21") != std::string::npos, "cayley e_k=21");
  expect(r.out.find("\"status\":\"pass\"") != std::string::npos, "cayley pass");

  r = run("cayley --p 7 --set 1 --k 3");
  expect(r.exit_code == 2, "asymmetric connection set rejected");

  r = run("orient-scan --n 4");
  expect(r.exit_code == 0, "orient-scan exit code");
  expect(r.out.find("\"violations\":[]") != std::string::npos, "orient-scan no violations");

  r = run("bogus-subcommand");
  expect(r.exit_code == 2, "unknown subcommand exit code");

  // Edge-list input auto-detection.
  r = run("check", "4\\n0 1\\n1 2\\n2 3\\n");
  expect(r.exit_code == 0, "edge-list input accepted");
  expect(r.out.find("\"n\":4") != std::string::npos, "edge-list parsed as P4");

  if (g_failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << g_failures << " cli test(s) failed\n";
  return 1;
}
