#include "doctest.h"
#include "orderlab/families.hpp"

using namespace orderlab;

namespace {

FamilyElement L(const char* t) { return FamilyElement::parse(FamilyId::ladder, t); }
FamilyElement O(const char* t) { return FamilyElement::parse(FamilyId::omega, t); }

}  // namespace

TEST_CASE("terms parse and print") {
  CHECK(L("a(2,7)") == FamilyElement::a(2, 7));
  CHECK(L(" a( 2 , 7 ) ").to_string() == "a(2,7)");
  CHECK(L("b(0)").to_string() == "b(0)");
  CHECK(L("top") == FamilyElement::top());
  CHECK(O("nat(4)").to_string() == "nat(4)");
  CHECK(O("omega") == FamilyElement::omega());
  CHECK_THROWS_AS(L("nat(3)"), ForeignElement);
  CHECK_THROWS_AS(O("top"), ForeignElement);
  CHECK_THROWS_AS(L("a(1)"), ParseError);
  CHECK_THROWS_AS(L("a(-1,2)"), ParseError);
  CHECK_THROWS_AS(L("a(99999999999999999999999,1)"), ParseError);
  CHECK(parse_family("omega") == FamilyId::omega);
  CHECK_THROWS_AS(parse_family("ladders"), ParseError);
}

TEST_CASE("family order examples") {
  CHECK(family_order(FamilyId::ladder, L("a(1,3)"), L("b(2)")));
  CHECK_FALSE(family_order(FamilyId::ladder, L("b(2)"), L("b(1)")));
  CHECK(family_order(FamilyId::omega, O("nat(5)"), O("omega")));
  CHECK_FALSE(family_order(FamilyId::ladder, L("a(1,3)"), L("a(2,5)")));
  CHECK_FALSE(family_order(FamilyId::ladder, L("b(0)"), L("a(0,9)")));
  CHECK_FALSE(family_order(FamilyId::ladder, L("a(2,0)"), L("b(1)")));
  CHECK(family_order(FamilyId::ladder, L("a(2,0)"), L("a(2,0)")));
  CHECK_FALSE(family_order(FamilyId::omega, O("omega"), O("nat(7)")));
  CHECK_THROWS_AS(family_order(FamilyId::ladder, L("top"), O("omega")), ForeignElement);
}

TEST_CASE("family order is a partial order on a sample of terms") {
  std::vector<FamilyElement> xs;
  for (std::uint64_t i = 0; i < 4; ++i) {
    for (std::uint64_t j = 0; j < 4; ++j) xs.push_back(FamilyElement::a(i, j));
    xs.push_back(FamilyElement::b(i));
  }
  xs.push_back(FamilyElement::top());
  for (const auto& x : xs)
    for (const auto& y : xs) {
      if (x != y) CHECK_FALSE((family_order(FamilyId::ladder, x, y) && family_order(FamilyId::ladder, y, x)));
      for (const auto& z : xs)
        if (family_order(FamilyId::ladder, x, y) && family_order(FamilyId::ladder, y, z))
          CHECK(family_order(FamilyId::ladder, x, z));
    }
}

TEST_CASE("membership examples") {
  const auto f = FamilyId::ladder;
  CHECK(family_membership(f, DistinguishedSet::a_prime, L("b(3)")));
  CHECK_FALSE(family_membership(f, DistinguishedSet::a_prime, L("top")));
  CHECK(family_membership(f, DistinguishedSet::scott_closure_a, L("top")));
  CHECK(family_membership(f, DistinguishedSet::down_a, L("a(0,0)")));
  CHECK(parse_distinguished_set("Aprime") == DistinguishedSet::a_prime);
  CHECK_THROWS_AS(parse_distinguished_set("closure"), UnknownSet);
  CHECK(family_membership(FamilyId::omega, DistinguishedSet::a_prime, O("omega")));
  CHECK_FALSE(family_membership(FamilyId::omega, DistinguishedSet::a, O("omega")));
}

TEST_CASE("way-below examples") {
  const auto f = FamilyId::omega;
  CHECK(family_way_below(f, O("nat(3)"), O("omega")));
  CHECK_FALSE(family_way_below(f, O("omega"), O("omega")));
  CHECK(family_way_below(f, O("nat(2)"), O("nat(2)")));
  CHECK_FALSE(family_way_below(f, O("nat(3)"), O("nat(2)")));
  CHECK_THROWS_AS(family_way_below(FamilyId::ladder, L("top"), L("top")), BadParameters);
  CHECK_THROWS_AS(family_way_below(f, L("top"), O("omega")), ForeignElement);
}

TEST_CASE("window examples") {
  const auto l11 = window(FamilyId::ladder, 1, 1);
  CHECK(l11.size() == 7);
  const auto o3 = window(FamilyId::omega, 0, 3);
  CHECK(o3.size() == 5);
  const auto p3 = o3.poset();
  CHECK(p3 == chain(5));
  CHECK(p3.label(4) == "omega");
  const auto l00 = window(FamilyId::ladder, 0, 0);
  CHECK(l00.poset() == chain(3));
  CHECK(l00.element(0).to_string() == "a(0,0)");
  CHECK(l00.element(2).to_string() == "top");
  const auto big = window(FamilyId::ladder, 4, 4);
  CHECK(big.size() == 31);
  CHECK_THROWS_AS(big.poset(), WindowTooLarge);
  CHECK_THROWS_AS(window(FamilyId::ladder, 20, 20), WindowTooLarge);
  CHECK(l11.index_of(L("b(1)")) == std::optional<std::size_t>(5));
  CHECK_FALSE(l11.index_of(L("b(2)")).has_value());
}

TEST_CASE("window soundness") {
  for (auto [m, n] : {std::pair<int, int>{0, 0}, {1, 1}, {2, 3}, {4, 4}, {8, 8}}) {
    const auto rep = verify_window_soundness(FamilyId::ladder, m, n);
    CHECK(rep.passed());
    CHECK(rep.statement("one-step-on-A") == false);
  }
  for (int n : {0, 1, 3, 8, 22, 60}) {
    const auto rep = verify_window_soundness(FamilyId::omega, 0, n);
    CHECK(rep.passed());
    CHECK(rep.statement("one-step-on-A") == true);
    CHECK(rep.statement("continuous") == true);
  }
  const auto rep = verify_window_soundness(FamilyId::omega, 0, 8);
  const auto* v = rep.find("omega.way-below-agreement");
  REQUIRE(v != nullptr);
  // omega << omega is the only pair where the finite window disagrees.
  CHECK(v->scope.find("1 decided by the infinite chain") != std::string::npos);
}

TEST_CASE("the ladder separates one-step closure from Scott closure") {
  const auto f = FamilyId::ladder;
  const auto top = FamilyElement::top();
  CHECK(family_membership(f, DistinguishedSet::scott_closure_a, top));
  CHECK_FALSE(family_membership(f, DistinguishedSet::a_prime, top));
  // A finite window alone is not enough: its own one-step operator is just the down-closure.
  const auto small = window(f, 1, 1).poset();
  Mask a = 0;
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small.label(i).front() == 'a') a |= bit(i);
  CHECK(one_step(small, small.set(a)) == down_closure(small, small.set(a)));
}
