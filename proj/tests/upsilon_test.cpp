#include <doctest.h>

#include <set>

#include "lcalc/harness.hpp"
#include "lcalc/lin.hpp"
#include "lcalc/upsilon.hpp"

using namespace lcalc;

namespace {
NatLType N(std::initializer_list<Nat> xs) { return NatLType(std::vector<Nat>(xs)); }
const char* kSK = "(\\\\\\(2 0 (1 0))) (\\\\1)";

struct RuleCase {
  const char* before;
  const char* rule;
  const char* after;
};
}  // namespace

TEST_SUITE("upsilon") {
  TEST_CASE("raw and abbreviated spellings convert without loss") {
    auto r = parse_raw_upsilon("(\\0)[\\0/] 1[^^ !] 2[^^ \\0/] 3[!]");
    CHECK(print_raw_upsilon(r) == "(\\0)[\\0/] 1[^^ !] 2[^^ \\0/] 3[!]");
    auto a = to_abbreviated(r);
    CHECK(print_upsilon(a) == "(\\0){\\0,0} 1^1 2{\\0,1} 3^0");
    CHECK(to_closures(a) == r);
    CHECK(parse_upsilon("(\\0)[\\0/] 1[^^ !]") == parse_upsilon("(\\0){\\0,0} 1^1"));
    CHECK(parse_raw_upsilon("4{\\0,2}") == parse_raw_upsilon("4[^^ ^^ \\0/]"));
    CHECK_THROWS_AS(parse_upsilon("0[^^ ]"), ParseError);
  }

  TEST_CASE("rule inventories") {
    CHECK(raw_rule_names().size() == 8);
    CHECK(lin_upsilon_rule_names().size() == 12);
  }

  TEST_CASE("each raw rule at the root") {
    const RuleCase cases[] = {
        {"(\\0) 1", "B", "0[1/]"},
        {"(0 1)[2/]", "App", "0[2/] 1[2/]"},
        {"(\\0)[1/]", "Lambda", "\\0[^^ 1/]"},
        {"0[5/]", "FVar", "5"},
        {"3[5/]", "RVar", "2"},
        {"0[^^ !]", "FVarLift", "0"},
        {"3[^^ 5/]", "RVarLift", "2[5/][!]"},
        {"3[!]", "VarShift", "4"},
    };
    std::set<std::string> seen;
    for (const auto& c : cases) {
      CAPTURE(c.before);
      auto r = step_raw(parse_raw_upsilon(c.before), {});
      REQUIRE(r);
      CHECK(r.value().rule == c.rule);
      CHECK(r.value().term == parse_raw_upsilon(c.after));
      seen.insert(r.value().rule);
    }
    CHECK(seen.size() == raw_rule_names().size());
    CHECK_FALSE(step_raw(parse_raw_upsilon("0 1"), {}));
  }

  TEST_CASE("each linear rule at the root") {
    const RuleCase cases[] = {
        {"(\\0) 1", "B_in", "0{1,0}"},
        {"(0 1)^2", "App_upd", "0^2 1^2"},
        {"(0 1){2,0}", "App_sub", "0{2,0} 1{2,0}"},
        {"(\\0)^0", "Lambda_upd", "\\0^1"},
        {"(\\0){1,0}", "Lambda_sub", "\\0{1,1}"},
        {"0{5,0}", "FVar_sub", "5"},
        {"3{5,0}", "RVar_sub", "2"},
        {"0{5,2}", "FVarLift_sub", "0"},
        {"3{5,2}", "RVarLift_sub", "2{5,1}^0"},
        {"0^1", "FVarLift_upd", "0"},
        {"3^2", "RVarLift_upd", "2^1^0"},
        {"3^0", "VarShift_upd", "4"},
    };
    std::set<std::string> seen;
    for (const auto& c : cases) {
      CAPTURE(c.before);
      auto r = step_in(parse_upsilon(c.before), {});
      REQUIRE(r);
      CHECK(r.value().rule == c.rule);
      CHECK(r.value().term == parse_upsilon(c.after));
      seen.insert(r.value().rule);
    }
    CHECK(seen.size() == lin_upsilon_rule_names().size());
  }

  TEST_CASE("steps inside a term") {
    auto t = parse_upsilon("\\((\\0) 0)");
    auto pos = in_redex_positions(t);
    REQUIRE(pos.size() == 1);
    CHECK(pos[0] == TermPath{0});
    CHECK(step_in(t, {0}).value().term == parse_upsilon("\\0{0,0}"));
    auto miss = step_in(t, {});
    REQUIRE_FALSE(miss);
    CHECK(miss.error().at == TermPath{});
  }

  TEST_CASE("typing") {
    CHECK(upsilon_type(parse_upsilon("0{3,0}")).value() == N({3}));
    CHECK(upsilon_type(parse_upsilon("0{\\0,0}")).value() == N({}));
    CHECK(upsilon_type(parse_upsilon("4^0")).value() == N({5}));
    CHECK(upsilon_type(parse_upsilon("0^3")).value() == N({0}));
    CHECK(upsilon_type(parse_upsilon("3{\\0,0}")).value() == N({2}));
    CHECK(upsilon_type(parse_upsilon("(0 2){1,1}")).value() == N({0, 1}));
    CHECK(upsilon_type(embed_upsilon(parse_plain("\\(0 5 2)"))).value() == N({1, 4}));
    CHECK_FALSE(upsilon_type(parse_upsilon("(0 0){1,1}")));
    CHECK_FALSE(upsilon_type(parse_upsilon("3{0 0,0}")));
  }

  TEST_CASE("typing agrees with the plain system on embedded terms") {
    for (const auto& t : plain_terms_upto(7, 2)) {
      auto a = lin_type(t);
      auto b = upsilon_type(embed_upsilon(t));
      REQUIRE(a.ok() == b.ok());
      if (a) CHECK(a.value() == b.value());
    }
  }

  TEST_CASE("one-step preservation checks") {
    auto r = check_preservation_step(parse_upsilon("(\\\\(1 0)) (\\0)"), {});
    REQUIRE(r);
    CHECK(r.value().rule == "B_in");
    CHECK(r.value().before_type == N({}));
    CHECK(r.value().after_type == N({}));

    auto f = check_preservation_step(parse_upsilon("0{\\0,0}"), {});
    REQUIRE(f);
    CHECK(f.value().after == parse_upsilon("\\0"));

    auto v = check_preservation_step(parse_upsilon("3{\\0,0}"), {});
    REQUIRE(v);
    CHECK(v.value().before_type == N({2}));
    CHECK(v.value().after_type == N({2}));

    auto none = check_preservation_step(parse_upsilon("\\0"), {});
    REQUIRE_FALSE(none);
    CHECK(none.error().kind == PreservationError::Kind::NoRedex);

    auto ill = check_preservation_step(parse_upsilon("(\\0 0) 1"), {});
    REQUIRE_FALSE(ill);
    CHECK(ill.error().kind == PreservationError::Kind::IllTypedInput);
  }

  TEST_CASE("raw normalization") {
    NormalizeOptions o;
    o.fuel = 100;
    auto sk = normalize_raw(to_raw(parse_plain(kSK)), o);
    REQUIRE(sk);
    CHECK(sk.value().term == to_raw(parse_plain("\\\\0")));
    CHECK(sk.value().steps == 26);

    auto id = normalize_raw(to_raw(parse_plain("\\0")));
    CHECK(id.value().steps == 0);
    CHECK(normalize_raw(to_raw(parse_plain("(\\0) (\\0)")), o).value().term ==
          to_raw(parse_plain("\\0")));

    o.fuel = 5;
    auto short_fuel = normalize_raw(to_raw(parse_plain(kSK)), o);
    REQUIRE_FALSE(short_fuel);
    CHECK(short_fuel.error().kind == NormalizeFailure::Kind::FuelExhausted);
    CHECK(short_fuel.error().steps_taken == 5);
  }

  TEST_CASE("trace lists rule names and positions") {
    NormalizeOptions o;
    o.trace = true;
    auto sk = normalize_raw(to_raw(parse_plain(kSK)), o);
    REQUIRE(sk);
    const auto& tr = sk.value().trace;
    REQUIRE(tr.size() == 26);
    CHECK(tr.front().rule == "B");
    CHECK(tr.front().path == TermPath{});
    CHECK(tr.back().rule == "RVar");
    CHECK(tr.back().term == to_raw(parse_plain("\\\\0")));
    std::string text = render_trace(tr, [](const RawUpsilonTerm& t) { return print_raw_upsilon(t); });
    CHECK(text.rfind("1  B  e  (\\\\(2 0 (1 0)))[\\\\1/]\n", 0) == 0);
  }

  TEST_CASE("plain interop") {
    auto k = parse_plain("\\\\(1 0)");
    CHECK(from_raw(to_raw(k)).value() == k);
    CHECK(upsilon_to_plain(embed_upsilon(k)).value() == k);
    CHECK_FALSE(from_raw(parse_raw_upsilon("0[!]")));
    CHECK(from_raw(parse_raw_upsilon("\\(0 1[!])")).error().at == TermPath{0, 1});
  }

  TEST_CASE("pipelines") {
    auto sk = normalize_pipeline(parse_plain(kSK));
    REQUIRE(sk);
    CHECK(sk.value().result == parse_plain("\\\\0"));
    auto not_linear = normalize_lin_pipeline(parse_plain(kSK));
    REQUIRE_FALSE(not_linear);
    CHECK(not_linear.error().kind == NormalizeFailure::Kind::NotClosedLinear);

    CHECK(normalize_lin_pipeline(parse_plain("\\0")).value().result == parse_plain("\\0"));
    CHECK(normalize_lin_pipeline(parse_plain("(\\0) (\\\\(1 0))")).value().result ==
          parse_plain("\\\\(1 0)"));
  }

  TEST_CASE("direct linear normalization matches the oracle on closed linear terms") {
    for (const auto& t : enumerate_closed_linear(9).value()) {
      CAPTURE(print_plain(t));
      NormalizeOptions o;
      o.verify = true;
      auto r = normalize_in(embed_upsilon(t), o);
      REQUIRE(r);
      CHECK(r.value().verified);
      auto plain = upsilon_to_plain(r.value().term);
      REQUIRE(plain);
      CHECK(plain.value() == oracle_beta_normalize(t).value());
    }
  }
}
