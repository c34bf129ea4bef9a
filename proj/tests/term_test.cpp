#include <doctest.h>

#include "lcalc/term.hpp"
#include "lcalc/result.hpp"

using namespace lcalc;

namespace {
PlainTerm I(Nat n) { return PlainTerm::index(n); }
PlainTerm L(PlainTerm b) { return PlainTerm::abs(std::move(b)); }
PlainTerm A(PlainTerm f, PlainTerm a) { return PlainTerm::app(std::move(f), std::move(a)); }
PlainTerm S() { return L(L(L(A(A(I(2), I(0)), A(I(1), I(0)))))); }
}  // namespace

TEST_SUITE("term") {
  TEST_CASE("parse builds the expected trees") {
    CHECK(parse_plain("\\\\(1 0)") == L(L(A(I(1), I(0)))));
    CHECK(parse_plain("0") == I(0));
    CHECK(parse_plain("\\\\\\(2 0 (1 0))") == S());
  }

  TEST_CASE("application associates left and lambda extends right") {
    CHECK(parse_plain("0 1 2") == A(A(I(0), I(1)), I(2)));
    CHECK(parse_plain("\\0 1") == L(A(I(0), I(1))));
    CHECK(parse_plain("(\\0) 1") == A(L(I(0)), I(1)));
    CHECK(parse_plain("  \\ \\ 1  ") == L(L(I(1))));
  }

  TEST_CASE("print is canonical and parse inverts it") {
    CHECK(print_plain(L(I(0))) == "\\0");
    CHECK(print_plain(S()) == "\\\\\\(2 0 (1 0))");
    CHECK(print_plain(A(L(I(0)), L(I(0)))) == "(\\0) (\\0)");
    for (const char* src : {"\\\\(1 0)", "(\\0) (\\0)", "0 (1 2)", "\\(0 (\\0))", "12 (\\3)"}) {
      CAPTURE(src);
      CHECK(print_plain(parse_plain(src)) == src);
    }
  }

  TEST_CASE("parse errors carry offset and expectations") {
    try {
      parse_plain("\\(1 0");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 5);
      CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_plain(""), ParseError);
    CHECK_THROWS_AS(parse_plain("0 )"), ParseError);
    CHECK_THROWS_AS(parse_plain("x"), ParseError);
  }

  TEST_CASE("free indices are shifted to the top") {
    CHECK(free_indices(L(A(A(I(0), I(5)), I(2)))) == std::vector<Nat>{1, 4});
    CHECK(free_indices(L(L(I(0)))).empty());
    CHECK(free_indices(A(I(0), I(0))) == std::vector<Nat>{0, 0});
  }

  TEST_CASE("occurrence profile counts per binder") {
    auto k = occurrence_profile(L(L(I(1))));
    CHECK(k.bound_counts == std::vector<std::size_t>{1, 0});
    CHECK(k.free.empty());
    auto d = occurrence_profile(L(A(I(0), I(0))));
    CHECK(d.bound_counts == std::vector<std::size_t>{2});
    auto open = occurrence_profile(I(3));
    CHECK(open.bound_counts.empty());
    CHECK(open.free == std::vector<Nat>{3});
  }

  TEST_CASE("structural closed-linear check") {
    CHECK(is_closed_linear_structural(L(L(A(I(1), I(0))))));
    CHECK_FALSE(is_closed_linear_structural(L(L(I(0)))));
    CHECK_FALSE(is_closed_linear_structural(S()));
    CHECK_FALSE(is_closed_linear_structural(I(0)));
  }

  TEST_CASE("occurs_free") {
    CHECK(occurs_free(L(I(1)), 0));
    CHECK_FALSE(occurs_free(L(I(0)), 0));
    CHECK(occurs_free(A(I(2), L(I(3))), 2));
  }

  TEST_CASE("paths print and parse") {
    CHECK(path_to_string({}) == "e");
    CHECK(path_to_string({0, 1, 0}) == "0.1.0");
    CHECK(path_from_string("e").empty());
    CHECK(path_from_string("1.0") == TermPath{1, 0});
    CHECK_THROWS(path_from_string("1..0"));
  }
}
