#include <doctest.h>

#include <algorithm>
#include <set>

#include "lcalc/lin.hpp"
#include "lcalc/resource.hpp"

using namespace lcalc;

namespace {
RTerm P(const char* src) { return parse_rterm(src); }
PlainTerm T(const char* src) { return parse_plain(src); }
RIndex R(Nat n, const char* bits) { return RIndex(n, bits_from_string(bits)); }
RLType E() { return RLType(); }

const char* kDupDupBefore = "\\dup 0 dup 0_1 (0_0 0_10 0_11)";
const char* kDupDupAfter = "\\dup 0 dup 0_0 (0_00 0_01 0_1)";

const BestiaryEntry& beast(const std::string& name) {
  for (const auto& b : bestiary())
    if (b.name == name) return b;
  throw std::out_of_range(name);
}
}  // namespace

TEST_SUITE("resource") {
  TEST_CASE("syntax") {
    for (const char* src : {"\\0", "\\\\era 0 1", "\\\\\\dup 0 (2 0_0 (1 0_1))", kDupDupBefore,
                            "(era 0 1) 2", "0_01 (\\1_1)"}) {
      CAPTURE(src);
      CHECK(print_rterm(P(src)) == src);
    }
    CHECK(P("0_01").index() == R(0, "01"));
    CHECK_THROWS_AS(P("dup (0)"), ParseError);
    CHECK_THROWS_AS(P("0_2"), ParseError);
  }

  TEST_CASE("typing") {
    CHECK(r_type(beast("S").term).value() == E());
    CHECK(r_type(P("\\\\\\dup 0 (2 0_0 (1 0_1))")).value() == E());
    CHECK(r_type(P("\\\\era 0 1")).value() == E());
    CHECK(r_type(P("\\0")).value() == E());
    CHECK(to_string(r_type(P("2 0_0 (1 0_1)")).value()) == "[(0,0),(0,1),(1,e),(2,e)]");

    auto twice = r_type(P("dup 0 (0_0 0_0)"));
    REQUIRE_FALSE(twice);
    CHECK(twice.error().kind == FailureKind::MergeConflict);

    CHECK(r_type(P("\\\\0")).error().kind == FailureKind::AbsHeadMissing);
    CHECK(r_type(P("\\(0 0_0)")).error().kind == FailureKind::ZeroDepthRemains);
    CHECK(r_type(P("dup 0 0_0")).error().kind == FailureKind::DupChildrenMissing);
    CHECK(to_string(r_type(P("era 3 0_1")).value()) == "[(0,1),(3,e)]");
  }

  TEST_CASE("derivations") {
    auto d = infer_r(P("\\\\era 0 1"));
    REQUIRE(d);
    CHECK(render_derivation(d.value().derivation) ==
          "abs : \\\\era 0 1 : []\n"
          "  abs : \\era 0 1 : [(0,e)]\n"
          "    era : era 0 1 : [(0,e),(1,e)]\n"
          "      ind : 1 : [(1,e)]\n");
  }

  TEST_CASE("free indices and closed linearity") {
    CHECK(free_r_indices(P("3_01")).value() == RLType({R(3, "01")}));
    CHECK(free_r_indices(P("\\\\era 0 1")).value() == E());
    auto missing = free_r_indices(P("dup 0 0_0"));
    REQUIRE_FALSE(missing);
    CHECK(missing.error().reason.kind == FailureKind::DupChildrenMissing);
    CHECK(is_linear_and_closed(beast("S").term));
    CHECK(is_linear_and_closed(beast("Y").term));
    CHECK_FALSE(is_linear_and_closed(P("0")));
    CHECK_FALSE(is_linear_and_closed(P("\\(0 0)")));
  }

  TEST_CASE("structural free set") {
    CHECK(structural_free(P("dup 0 (0_0 0_1 2)")) == std::vector<RIndex>{R(0, ""), R(2, "")});
    CHECK(structural_free(P("\\(0 1_1)")) == std::vector<RIndex>{R(0, "1")});
    CHECK(structural_free(P("era 1 0")) == std::vector<RIndex>{R(0, ""), R(1, "")});
  }

  TEST_CASE("replace and rename") {
    CHECK(replace(P("0_00 (\\1_01)"), R(0, "0"), R(0, "")) == P("0_0 (\\1_1)"));
    CHECK(replace(P("dup 0_0 (0_00 0_01)"), R(0, "0"), R(0, "1")) == P("dup 0_1 (0_10 0_11)"));
    CHECK(replace(P("1_0 0_0"), R(0, "0"), R(0, "1")) == P("1_0 0_1"));
    CHECK(rename_prepend(P("0 (\\1)"), 0, true) == P("0_1 (\\1_1)"));
    CHECK(rename_prepend(P("dup 0 (0_0 0_1)"), 0, false) == P("dup 0_0 (0_00 0_01)"));
  }

  TEST_CASE("each rule at the root") {
    struct Case {
      const char* before;
      const char* rule;
      const char* after;
    };
    const Case cases[] = {
        {"\\era 1_0 0", "lambda-era", "era 0_0 \\0"},
        {"dup 0 \\(0 1_0 1_1)", "dup-lambda", "\\dup 1 (0 1_0 1_1)"},
        {"(era 0 1) 2", "AppL-era", "era 0 (1 2)"},
        {"1 (era 0 2)", "AppR-era", "era 0 (1 2)"},
        {"dup 0 (0_0 0_1 2)", "AppL-dup", "(dup 0 (0_0 0_1)) 2"},
        {"dup 0 (2 (0_0 0_1))", "AppR-dup", "2 (dup 0 (0_0 0_1))"},
        {"era 0 era 1 2", "era-era", "era 1 era 0 2"},
        {"dup 0 era 0_1 0_0", "era-dup1", "0"},
        {"dup 0 era 0_0 0_1", "era-dup0", "0"},
        {"dup 0 era 1 (0_0 0_1)", "era-dup", "era 1 dup 0 (0_0 0_1)"},
        {"dup 0 dup 0_1 (0_0 0_10 0_11)", "dup-dup1", "dup 0 dup 0_0 (0_00 0_01 0_1)"},
        {"dup 0 dup 1 (0_0 0_1 1_0 1_1)", "dup-dup2", "dup 1 dup 0 (0_0 0_1 1_0 1_1)"},
    };
    std::set<std::string> seen;
    for (const auto& c : cases) {
      CAPTURE(c.before);
      auto r = step_r(P(c.before), {});
      REQUIRE(r);
      CHECK(r.value().rule == c.rule);
      CHECK(r.value().term == P(c.after));
      seen.insert(r.value().rule);
    }
    CHECK(seen.size() == r_rule_names().size());
  }

  TEST_CASE("guards block rules") {
    CHECK_FALSE(step_r(P("dup 0 (0_0 0_1)"), {}));  // each side holds one child
    CHECK_FALSE(step_r(P("era 1 era 0 2"), {}));    // already ordered
    CHECK_FALSE(step_r(P("dup 1 dup 0 (0_0 0_1 1_0 1_1)"), {}));
    CHECK_FALSE(step_r(P("\\era 0 1"), {}));        // depth 0 cannot leave its binder
    CHECK(r_redex_positions(P("\\\\era 0 1")).empty());
  }

  TEST_CASE("the dup-dup example rewrites in one step") {
    auto t = P(kDupDupBefore);
    CHECK(r_redex_positions(t) == std::vector<TermPath>{{0}});
    auto r = step_r(t, {0});
    REQUIRE(r);
    CHECK(r.value().rule == "dup-dup1");
    CHECK(r.value().term == P(kDupDupAfter));
    CHECK(r_type(r.value().term).value() == r_type(t).value());

    NormalizeOptions o;
    o.trace = true;
    auto n = normalize_dup_era(t, o);
    REQUIRE(n);
    // dup-dup1 fires once, then the inner duplicator moves into the function
    const auto& tr = n.value().trace;
    REQUIRE(tr.size() == 2);
    CHECK(tr[0].rule == "dup-dup1");
    CHECK(tr[0].term == P(kDupDupAfter));
    CHECK(tr[1].rule == "AppL-dup");
    CHECK(n.value().term == P("\\dup 0 ((dup 0_0 (0_00 0_01)) 0_1)"));
  }

  TEST_CASE("normal forms stay put") {
    CHECK(normalize_dup_era(beast("I").term).value().steps == 0);
    CHECK(normalize_dup_era(beast("K").term).value().steps == 0);
  }

  TEST_CASE("readback") {
    CHECK(readback(beast("S").term) == T("\\\\\\(2 0 (1 0))"));
    CHECK(readback(P(kDupDupBefore)) == T("\\(0 0 0)"));
    CHECK(readback(P("4_0110")) == T("4"));
  }

  TEST_CASE("read") {
    CHECK(read(T("\\\\1")) == P("\\\\era 0 1"));
    CHECK(read(T("\\(0 0 0)")) == P(kDupDupAfter));
    CHECK(read(T("\\\\\\(2 0 (1 0))")) == beast("S").term);
    CHECK(read(T("0 0")) == P("dup 0 (0_0 0_1)"));
    CHECK(read(T("3")) == P("3"));
  }

  TEST_CASE("standardize") {
    CHECK(standardize(P(kDupDupBefore)) == P(kDupDupAfter));
    CHECK(standardize(beast("I").term) == beast("I").term);
    for (const auto& t : plain_terms_upto(7, 1)) CHECK(standardize(read(t)) == read(t));
  }

  TEST_CASE("bestiary") {
    std::set<std::string> names;
    for (const auto& b : bestiary()) {
      CAPTURE(b.name);
      names.insert(b.name);
      CHECK(r_type(b.term).value() == E());
      CHECK(readback(b.term) == b.plain);
      CHECK(standardize(standardize(b.term)) == standardize(b.term));
    }
    for (const char* n : {"I", "K", "S", "ff", "tt", "Y", "5", "3+2", "2+3", "3+1+1"})
      CHECK(names.count(n) == 1);
    for (const char* n : {"I", "K", "S", "ff", "tt", "Y"}) {
      CAPTURE(n);
      CHECK(read(beast(n).plain) == beast(n).term);
    }
    for (const char* n : {"3+2", "2+3", "3+1+1"}) CHECK(readback(beast(n).term) == readback(beast("5").term));
    CHECK(readback(beast("5").term) == T("\\\\(1 (1 (1 (1 (1 0)))))"));
    CHECK(beast("ff").plain == T("\\\\0"));
    CHECK(beast("tt").plain == T("\\\\1"));
  }

  TEST_CASE("representatives of the triple self-application") {
    auto t = T("\\(0 0 0)");
    auto reps = representatives(t);
    CHECK(reps.size() == 12);
    std::set<std::string> distinct;
    for (const auto& r : reps) {
      distinct.insert(print_rterm(r));
      CHECK(readback(r) == t);
      CHECK(r_type(r).value() == E());
    }
    CHECK(distinct.size() == 12);
    CHECK(std::find(reps.begin(), reps.end(), read(t)) != reps.end());
    CHECK(std::find(reps.begin(), reps.end(), P(kDupDupBefore)) != reps.end());
  }

  TEST_CASE("representatives of simpler terms") {
    CHECK(representatives(T("\\0")) == std::vector<RTerm>{P("\\0")});
    CHECK(representatives(T("\\\\1")) == std::vector<RTerm>{P("\\\\era 0 1")});
    CHECK(representatives(T("\\(0 0)")).size() == 2);
  }

  TEST_CASE("beta through the plain pipeline") {
    auto sk = beta_r(RTerm::app(beast("S").term, beast("K").term));
    REQUIRE(sk);
    CHECK(readback(sk.value().result) == T("\\\\0"));
    CHECK(sk.value().plain_normal == T("\\\\0"));
    CHECK(is_linear_and_closed(sk.value().result));

    CHECK(beta_r(RTerm::app(beast("I").term, beast("I").term)).value().result == beast("I").term);
    CHECK(beta_r(beast("K").term).value().result == beast("K").term);

    auto open = beta_r(P("0"));
    REQUIRE_FALSE(open);
    CHECK(open.error().kind == NormalizeFailure::Kind::NotClosedLinear);
  }

  TEST_CASE("generated typed terms") {
    auto two = typed_closed_rterms(2, 2);
    CHECK(std::find(two.begin(), two.end(), P("\\0")) != two.end());
    for (std::size_t size = 1; size <= 6; ++size)
      for (const auto& t : typed_closed_rterms(size, 2)) {
        CHECK(t.size() == size);
        CHECK(is_linear_and_closed(t));
      }
  }
}
