#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with `args` (already shell-quoted) and captures stdout, or
// stderr when `errors` is set.
Run lcalc(const std::string& args, bool errors = false) {
  std::string cmd = std::string(LCALC_BIN) + " " + args + (errors ? " 2>&1 >/dev/null" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string last_line(const std::string& s) {
  auto end = s.find_last_not_of('\n');
  auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("typecheck") {
  auto ok = lcalc("typecheck --calculus lin '\\\\(1 0)'");
  CHECK(ok.status == 0);
  CHECK(ok.out == "[]\n");
  auto bad = lcalc("typecheck --calculus lin '\\\\0'");
  CHECK(bad.status == 1);
  CHECK(lcalc("typecheck --calculus lin '\\\\0'", true).out.rfind("AbsHeadMissing", 0) == 0);
  auto j = lcalc("typecheck --json '\\\\0'");
  CHECK(j.status == 1);
  CHECK(nlohmann::json::parse(j.out)["error"]["kind"] == "AbsHeadMissing");
  CHECK(lcalc("typecheck --calculus r '\\\\\\dup 0 (2 0_0 (1 0_1))'").out == "[]\n");
  CHECK(lcalc("typecheck --calculus upsilon '4^0'").out == "[5]\n");
}

TEST_CASE("pipeline normalization with trace") {
  auto r = lcalc("normalize --pipeline '(\\\\\\(2 0 (1 0))) (\\\\1)' --trace");
  CHECK(r.status == 0);
  CHECK(last_line(r.out) == "\\\\0");
  CHECK(r.out.rfind("1  B  e  ", 0) == 0);
  CHECK(r.out.find("  RVar  ") != std::string::npos);
}

TEST_CASE("json and text agree") {
  auto text = lcalc("normalize '(\\0) (\\\\(1 0))'");
  auto js = lcalc("normalize --json '(\\0) (\\\\(1 0))'");
  CHECK(text.status == 0);
  CHECK(js.status == 0);
  CHECK(nlohmann::json::parse(js.out)["result"] == last_line(text.out));
  auto st = lcalc("step --calculus r --json '\\dup 0 dup 0_1 (0_0 0_10 0_11)'");
  auto j = nlohmann::json::parse(st.out);
  CHECK(j["rule"] == "dup-dup1");
  CHECK(j["path"] == "0");
  CHECK(lcalc("step --calculus r '\\dup 0 dup 0_1 (0_0 0_10 0_11)'").out ==
        "dup-dup1  0  \\dup 0 dup 0_0 (0_00 0_01 0_1)\n");
}

TEST_CASE("translations") {
  CHECK(lcalc("read '\\(0 0 0)'").out == "\\dup 0 dup 0_0 (0_00 0_01 0_1)\n");
  CHECK(lcalc("readback '\\dup 0 dup 0_1 (0_0 0_10 0_11)'").out == "\\(0 0 0)\n");
  CHECK(lcalc("standardize '\\dup 0 dup 0_1 (0_0 0_10 0_11)'").out ==
        "\\dup 0 dup 0_0 (0_00 0_01 0_1)\n");
  CHECK(lcalc("normalize --calculus r --beta '(\\\\\\dup 0 (2 0_0 (1 0_1))) (\\\\era 0 1)'").out ==
        "\\era 0 \\0\n");
}

TEST_CASE("enumerate and check-linear") {
  auto e = lcalc("enumerate --max-size 2");
  CHECK(e.out == "\\0\n");
  CHECK(lcalc("enumerate --max-size 12").status == 1);
  auto reps = lcalc("enumerate --calculus r --json '\\(0 0 0)'");
  CHECK(nlohmann::json::parse(reps.out)["count"] == 12);
  CHECK(lcalc("check-linear '\\\\(1 0)'").status == 0);
  CHECK(lcalc("check-linear '\\(0 0)'").status == 1);
}

TEST_CASE("input from a file") {
  const std::string path = "cli_test_input.txt";
  std::ofstream(path) << "\\\\(1 0)\n";
  CHECK(lcalc("typecheck --file " + path).out == "[]\n");
  std::remove(path.c_str());
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(lcalc("parse '\\(0'", true).out.find("grammar") != std::string::npos);
  CHECK(lcalc("step '\\0'").status == 2);
  CHECK(lcalc("parse '\\(0'").status == 2);
  CHECK(lcalc("frobnicate '0'").status == 2);
  CHECK(lcalc("typecheck --calculus nope '0'").status == 2);
  CHECK(lcalc("typecheck").status == 2);
  CHECK(lcalc("suite nope").status == 2);
}

TEST_CASE("non-linear pipeline input falls back with a note") {
  auto r = lcalc("normalize --pipeline '(\\(0 0)) (\\0)'");
  CHECK(r.status == 0);
  CHECK(r.out == "\\0\n");
  CHECK(lcalc("normalize --pipeline '(\\(0 0)) (\\0)'", true).out.rfind("note: ", 0) == 0);
}

TEST_CASE("suite command") {
  auto r = lcalc("suite characterization --max-size 5");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("suite characterization: PASS", 0) == 0);
  auto j = lcalc("suite lemma --json --seed 3");
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(last_line(j.out))["passed"] == true);
}
