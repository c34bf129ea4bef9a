// Acceptance run: one PASS/FAIL line per criterion, with wall time. Exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "lcalc/harness.hpp"
#include "lcalc/lin.hpp"
#include "lcalc/resource.hpp"
#include "lcalc/upsilon.hpp"

using namespace lcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int n, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && s >= limit_seconds) o.require(false, "over the time limit");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs", s);
  std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << " (" << timing;
  if (limit_seconds > 0) std::cout << ", limit " << limit_seconds << "s";
  std::cout << ")";
  if (!o.detail.empty()) std::cout << " " << o.detail;
  std::cout << std::endl;
}

void suite_outcome(Outcome& o, const SuiteReport& r) {
  o.require(r.passed(), r.name + " failed " + std::to_string(r.failed) + " cases" +
                            (r.failures.empty() ? "" : ", first: " + r.failures[0].id + ": " +
                                                           r.failures[0].detail));
  if (o.ok) o.detail = r.name + ": " + std::to_string(r.cases) + " cases";
}

// Every name in `names` counted at least once under prefix + name.
void inventory(Outcome& o, const std::string& label, const std::vector<std::string>& names,
               const std::map<std::string, std::size_t>& counts, const std::string& prefix) {
  std::string line = label + " " + std::to_string(names.size()) + " rules:";
  for (const auto& n : names) {
    auto it = counts.find(prefix + n);
    const std::size_t c = it == counts.end() ? 0 : it->second;
    line += " " + n + "=" + std::to_string(c);
    o.require(c > 0, label + " rule " + n + " never fired");
  }
  std::cout << "  " << line << "\n";
}

}  // namespace

int main() {
  const char* sk = "(\\\\\\(2 0 (1 0))) (\\\\1)";

  criterion(1, 1, [] {
    Outcome o;
    auto a = lin_type(parse_plain("\\\\(1 0)"));
    o.require(a && a.value() == NatLType(), "\\\\(1 0) not typed []");
    auto b = lin_type(parse_plain("\\(0 5 2)"));
    o.require(b && b.value() == NatLType({1, 4}), "\\(0 5 2) not typed [1,4]");
    auto c = lin_type(parse_plain("2 0 (1 0)"));
    o.require(!c && c.error().kind == FailureKind::MergeConflict && c.error().subject == "0",
              "2 0 (1 0) not MergeConflict(0)");
    auto d = lin_type(parse_plain("\\\\0"));
    o.require(!d && d.error().kind == FailureKind::AbsHeadMissing, "\\\\0 not AbsHeadMissing");
    return o;
  });

  criterion(2, 1, [&] {
    Outcome o;
    PlainTerm t = parse_plain(sk);
    auto r = normalize_pipeline(t);
    auto oracle = oracle_beta_normalize(t);
    o.require(r && r.value().result == parse_plain("\\\\0"), "pipeline result is not \\\\0");
    o.require(oracle && oracle.value() == parse_plain("\\\\0"), "oracle result is not \\\\0");
    if (o.ok) o.detail = std::to_string(r.value().run.steps) + " steps to \\\\0";
    return o;
  });

  criterion(3, 30, [] {
    Outcome o;
    auto r = run_lemma_suite(4, 6, 1, 10000);
    suite_outcome(o, r);
    return o;
  });

  criterion(4, 300, [] {
    Outcome o;
    suite_outcome(o, run_upsilon_preservation_suite(9));
    return o;
  });

  criterion(5, 0, [] {
    Outcome o;
    suite_outcome(o, run_characterization_suite(9));
    return o;
  });

  criterion(6, 0, [] {
    Outcome o;
    std::set<std::string> seen;
    std::optional<PlainTerm> five;
    for (const auto& b : bestiary()) {
      seen.insert(b.name);
      auto ty = r_type(b.term);
      o.require(ty && ty.value().empty(), b.name + " not typed []");
      o.require(readback(b.term) == b.plain, b.name + " reads back wrongly");
      if (b.name == "5") five = readback(b.term);
    }
    o.require(five.has_value(), "numeral 5 missing");
    for (const char* n : {"I", "K", "S", "ff", "tt", "Y", "3+2", "2+3", "3+1+1"})
      o.require(seen.count(n) == 1, std::string(n) + " missing");
    for (const auto& b : bestiary())
      if (b.name == "3+2" || b.name == "2+3" || b.name == "3+1+1")
        o.require(five && readback(b.term) == *five, b.name + " does not share the readback of 5");
    if (o.ok) o.detail = std::to_string(bestiary().size()) + " terms";
    return o;
  });

  criterion(7, 0, [] {
    Outcome o;
    suite_outcome(o, run_roundtrip_suite(12));
    return o;
  });

  criterion(8, 0, [] {
    Outcome o;
    PlainTerm t = parse_plain("\\(0 0 0)");
    o.require(read(t) == parse_rterm("\\dup 0 dup 0_0 (0_00 0_01 0_1)"),
              "read gives " + print_rterm(read(t)));
    auto reps = representatives(t);
    o.require(reps.size() == 12, std::to_string(reps.size()) + " representatives");
    for (const auto& r : reps) {
      auto ty = r_type(r);
      o.require(ty && ty.value().empty() && readback(r) == t, print_rterm(r) + " is not a form of the term");
    }
    if (o.ok) o.detail = "read " + print_rterm(read(t)) + ", 12 forms";
    return o;
  });

  SuiteReport r_report;
  criterion(9, 0, [&] {
    Outcome o;
    r_report = run_r_preservation_suite(9);
    suite_outcome(o, r_report);
    RTerm before = parse_rterm("\\dup 0 dup 0_1 (0_0 0_10 0_11)");
    auto pos = r_redex_positions(before);
    o.require(!pos.empty(), "no redex in the dup-dup example");
    if (!pos.empty()) {
      auto s = step_r(before, pos.front());
      o.require(s && s.value().rule == "dup-dup1" &&
                    s.value().term == parse_rterm("\\dup 0 dup 0_0 (0_00 0_01 0_1)"),
                "dup-dup example does not rewrite to the expected term");
    }
    return o;
  });

  criterion(10, 0, [&] {
    Outcome o;
    auto pipeline = run_pipeline_oracle_suite(9);
    auto ups = run_upsilon_preservation_suite(11);
    o.require(pipeline.passed() && ups.passed(), "supporting suites failed");
    inventory(o, "lambda-upsilon", raw_rule_names(), pipeline.counts, "raw:");
    inventory(o, "linear lambda-upsilon", lin_upsilon_rule_names(), ups.counts, "in:");
    inventory(o, "resource", r_rule_names(), r_report.counts, "r:");
    if (o.ok) o.detail = "8 + 12 + 12 rules exercised";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
