// End-to-end checks of the bac executable: spawns the real binary (path in
// BAC_CLI), captures stdout and exit codes.  Not a Catch2 suite so that exact
// exit codes are easy to assert.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  } else {
    std::cout << "ok: " << what << "\n";
  }
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

int main() {
  const char* cli_env = std::getenv("BAC_CLI");
  const char* fixtures_env = std::getenv("BAC_FIXTURES");
  if (!cli_env || !fixtures_env) {
    std::cerr << "BAC_CLI and BAC_FIXTURES must be set\n";
    return 1;
  }
  std::string cli = cli_env;
  std::string fixtures = fixtures_env;

  {
    RunResult r = run(cli + " torsion " + fixtures + "/two_term_2_3.json");
    expect(r.exit_code == 0 && trim(r.out) == "2/3", "torsion of <2|3> prints 2/3");
  }
  {
    RunResult r = run(cli + " torsion " + fixtures + "/reference_121.json");
    expect(r.exit_code == 0 && trim(r.out) == "-1", "torsion of the reference complex prints -1");
  }
  {
    RunResult r = run(cli + " verify --suite switching --trials 50 --seed 7 --field q");
    expect(r.exit_code == 0, "verify switching over Q exits 0");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(!j.is_discarded() && j["failures"].empty() && j["trials"] == 50,
           "verify emits a machine-readable report");
  }
  {
    RunResult r = run(cli + " verify --suite nenashev --field fp:4");
    expect(r.exit_code == 2, "non-prime modulus exits 2");
  }
  {
    RunResult r = run(cli + " verify --suite no_such_suite --trials 1");
    expect(r.exit_code == 2, "unknown suite exits 2");
  }
  {
    RunResult r = run("echo 'not json' | " + cli + " torsion");
    expect(r.exit_code == 2, "malformed JSON exits 2");
  }
  {
    RunResult a = run(cli + " gen --kind binary --seed 5 --field fp:101");
    RunResult b = run(cli + " gen --kind binary --seed 5 --field fp:101");
    expect(a.exit_code == 0 && a.out == b.out && !a.out.empty(), "gen is deterministic in the seed");
  }
  {
    RunResult r = run(cli + " gen --kind ladder --seed 3 --field q --length 3 | " + cli + " total | " +
                      cli + " torsion");
    expect(r.exit_code == 0 && !trim(r.out).empty(), "gen | total | torsion pipeline");
  }
  {
    RunResult sw = run(cli + " shorten " + fixtures + "/two_term_2_3.json --op sw | " + cli + " torsion");
    expect(sw.exit_code == 0 && trim(sw.out) == "3/2", "shorten --op sw inverts the torsion");
  }
  {
    RunResult r = run(cli + " gen --kind binary --seed 11 --field fp:101 --length 3 | " + cli +
                      " shorten --op pk | " + cli + " torsion");
    RunResult direct = run(cli + " gen --kind binary --seed 11 --field fp:101 --length 3 | " + cli + " torsion");
    expect(r.exit_code == 0 && trim(r.out) == trim(direct.out),
           "shorten --op pk evaluates back to the torsion of the input");
  }
  {
    RunResult r = run(cli + " gen --kind nenashev --seed 2 --field fp:101 | " + cli + " total --decompose");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.exit_code == 0 && !j.is_discarded() && j.contains("reduced") && j.contains("columns"),
           "total --decompose emits the reduced complex and its pieces");
  }
  {
    RunResult r = run(cli + " verify --suite all --trials 4 --seed 3");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.exit_code == 0 && !j.is_discarded() && j.is_array() && j.size() == 11,
           "verify --suite all reports every suite");
  }
  {
    RunResult r = run("BAC_TRIALS=2 " + cli + " verify --suite shift --field q");
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    expect(r.exit_code == 0 && !j.is_discarded() && j["trials"] == 2,
           "BAC_TRIALS overrides the default trial count");
  }

  if (failures) std::cerr << failures << " CLI check(s) failed\n";
  return failures ? 1 : 0;
}
