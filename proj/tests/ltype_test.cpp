#include <doctest.h>

#include "lcalc/ltype.hpp"

using namespace lcalc;

namespace {
NatLType N(std::initializer_list<Nat> xs) { return NatLType(std::vector<Nat>(xs)); }
RIndex R(Nat n, const char* bits) { return RIndex(n, bits_from_string(bits)); }
}  // namespace

TEST_SUITE("ltype") {
  TEST_CASE("merge") {
    CHECK(merge(N({2}), N({0})).value() == N({0, 2}));
    CHECK(merge(N({}), N({1, 3})).value() == N({1, 3}));
    auto bad = merge(N({0, 2}), N({0, 1}));
    REQUIRE_FALSE(bad);
    CHECK(bad.error().index == 0);
    // the smallest shared element is reported
    CHECK(merge(N({1, 3, 5}), N({3, 5})).error().index == 3);
  }

  TEST_CASE("decrement and increment") {
    CHECK(decrement(N({2, 5})).value() == N({1, 4}));
    CHECK(decrement(N({})).value() == N({}));
    CHECK_FALSE(decrement(N({0, 3})));
    CHECK(increment(N({3, 4})) == N({4, 5}));
    CHECK(increment(N({0, 2}), 0) == N({0, 2}));
    CHECK(increment(N({0}), 2) == N({2}));
  }

  TEST_CASE("filters over basic predicates") {
    auto l = N({0, 2, 3, 4});
    CHECK(filter(BasicPredicate::less_than(3), l) == N({0, 2}));
    CHECK(filter(BasicPredicate::at_least(3), l) == N({3, 4}));
    CHECK(filter(BasicPredicate::greater_than(3), l) == N({4}));
    CHECK(increment(filter(BasicPredicate::at_least(3), l)) == N({4, 5}));
    CHECK(to_string(BasicPredicate::less_than(3)) == "<3");
    CHECK(to_string(BasicPredicate::greater_than(3)) == ">3");
    CHECK(to_string(BasicPredicate::at_least(3)) == ">=3");
  }

  TEST_CASE("lists must ascend") {
    CHECK_THROWS_AS(NatLType(std::vector<Nat>{2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(NatLType(std::vector<Nat>{1, 1}), std::invalid_argument);
  }

  TEST_CASE("resource index order") {
    CHECK(compare_rindex(R(0, "0"), R(0, "1")) == Order::Less);
    CHECK(compare_rindex(R(1, ""), R(2, "")) == Order::Less);
    CHECK(compare_rindex(R(0, ""), R(0, "")) == Order::Equal);
    CHECK(compare_rindex(R(0, "0"), R(0, "01")) == Order::Less);
    CHECK(compare_rindex(R(0, "1"), R(0, "01")) == Order::Greater);
    CHECK(compare_rindex(R(0, "11"), R(1, "")) == Order::Less);
  }

  TEST_CASE("resource index order is a strict total order on a bounded set") {
    std::vector<RIndex> all;
    std::vector<std::string> paths = {"", "0", "1", "00", "01", "10", "11", "000", "101"};
    for (Nat n = 0; n < 3; ++n)
      for (const auto& p : paths) all.push_back(R(n, p.c_str()));
    for (const auto& a : all)
      for (const auto& b : all) {
        Order ab = compare_rindex(a, b);
        Order ba = compare_rindex(b, a);
        CHECK((ab == Order::Equal) == (a == b));
        CHECK((ab == Order::Less) == (ba == Order::Greater));
        for (const auto& c : all)
          if (ab == Order::Less && compare_rindex(b, c) == Order::Less)
            CHECK(compare_rindex(a, c) == Order::Less);
      }
  }

  TEST_CASE("merge over resource indices") {
    RLType a({R(0, "0"), R(2, "")});
    RLType b({R(0, "1"), R(1, "")});
    CHECK(to_string(merge(a, b).value()) == "[(0,0),(0,1),(1,e),(2,e)]");
    CHECK_FALSE(merge(a, RLType({R(0, "0")})));
    CHECK(merge(RLType({R(0, "")}), RLType({R(0, "0")})).ok());
    CHECK(to_string(decrement(RLType({R(1, "01")})).value()) == "[(0,01)]");
  }

  TEST_CASE("text forms") {
    CHECK(to_string(N({0, 2, 5})) == "[0,2,5]");
    CHECK(parse_nat_ltype("[0,2,5]") == N({0, 2, 5}));
    CHECK(parse_nat_ltype("[]") == N({}));
    RLType r = parse_r_ltype("[(0,01),(1,e)]");
    CHECK(r == RLType({R(0, "01"), R(1, "")}));
    CHECK(to_string(r) == "[(0,01),(1,e)]");
    CHECK(rindex_to_string(R(0, "01")) == "0_01");
    CHECK(rindex_to_string(R(2, "")) == "2");
    CHECK_THROWS(parse_nat_ltype("[2,1]"));
  }
}
