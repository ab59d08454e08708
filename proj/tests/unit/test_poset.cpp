#include <algorithm>
#include <array>
#include <set>

#include "doctest.h"
#include "orderlab/poset.hpp"

using namespace orderlab;

namespace {

// Independent oracle: every relation on n points as an n*n boolean matrix,
// filtered by the three axioms written out over booleans.
std::vector<std::vector<Mask>> brute_force_posets(std::size_t n) {
  std::vector<std::vector<Mask>> out;
  const std::uint64_t limit = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < limit; ++code) {
    auto r = [&](std::size_t i, std::size_t j) { return ((code >> (i * n + j)) & 1u) != 0; };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = r(i, i);
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (i != j && r(i, j) && r(j, i)) ok = false;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r(i, j) && r(j, k) && !r(i, k)) ok = false;
    if (!ok) continue;
    std::vector<Mask> rows(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r(i, j)) rows[i] |= bit(j);
    out.push_back(rows);
  }
  return out;
}

std::vector<Pair> with_diagonal(std::size_t n, std::vector<Pair> pairs) {
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return pairs;
}

ElementSet S(std::size_t n, std::initializer_list<std::size_t> xs) { return ElementSet::of(n, xs); }

}  // namespace

TEST_CASE("validate_poset accepts a full 3-chain") {
  const auto p = validate_poset(3, with_diagonal(3, {{0, 1}, {1, 2}, {0, 2}}), RelationMode::full_order);
  CHECK(p == chain(3));
  CHECK(p.bottom() == 0u);
}

TEST_CASE("validate_poset reports antisymmetry with its witness") {
  try {
    validate_poset(2, with_diagonal(2, {{0, 1}, {1, 0}}), RelationMode::full_order);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::antisymmetry);
    CHECK(e.witness() == Pair{0, 1});
  }
}

TEST_CASE("validate_poset full-order mode demands reflexivity and transitivity") {
  CHECK_THROWS_AS(validate_poset(2, {{0, 1}}, RelationMode::full_order), AxiomViolation);
  try {
    validate_poset(3, with_diagonal(3, {{0, 1}, {1, 2}}), RelationMode::full_order);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::transitivity);
    CHECK(e.witness() == Pair{0, 2});
  }
}

TEST_CASE("validate_poset covers mode closes transitively") {
  const auto p = validate_poset(3, {{0, 1}, {1, 2}}, RelationMode::covers);
  // Oracle: triple-loop closure of the cover pairs.
  std::array<std::array<bool, 3>, 3> r{};
  for (int i = 0; i < 3; ++i) r[i][i] = true;
  r[0][1] = r[1][2] = true;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.leq(i, j) == r[i][j]);
  CHECK(p.leq(0, 2));
  CHECK(p == chain(3));
}

TEST_CASE("validate_poset rejects cycles in covers mode and bad indices") {
  CHECK_THROWS_AS(validate_poset(3, {{0, 1}, {1, 2}, {2, 0}}, RelationMode::covers), AxiomViolation);
  CHECK_THROWS_AS(validate_poset(3, {{0, 3}}, RelationMode::covers), IndexOutOfRange);
  CHECK_THROWS_AS(validate_poset(0, {}, RelationMode::covers), BadParameters);
  CHECK_THROWS_AS(validate_poset(25, {}, RelationMode::covers), BadParameters);
}

TEST_CASE("up and down closure") {
  const auto c3 = chain(3);
  const auto d4 = diamond();
  CHECK(up_closure(c3, S(3, {0})) == S(3, {0, 1, 2}));
  CHECK(up_closure(d4, S(4, {1})) == S(4, {1, 3}));
  CHECK(up_closure(d4, d4.none()).is_empty());
  CHECK(down_closure(d4, S(4, {1, 2})) == S(4, {0, 1, 2}));
}

TEST_CASE("directedness") {
  const auto c3 = chain(3);
  const auto d4 = diamond();
  CHECK(is_directed(c3, S(3, {0, 1})));
  CHECK_FALSE(is_directed(d4, S(4, {1, 2})));
  CHECK(is_directed(d4, S(4, {1, 2, 3})));
  CHECK_FALSE(is_directed(c3, c3.none()));
  CHECK(is_filtered(d4, S(4, {0, 1, 2})));
  CHECK_FALSE(is_filtered(d4, S(4, {1, 2})));
}

TEST_CASE("supremum and infimum") {
  const auto d4 = diamond();
  CHECK(supremum(d4, S(4, {1, 2})) == 3u);
  CHECK(supremum(chain(3), S(3, {1})) == 1u);
  CHECK_FALSE(supremum(antichain(2), S(2, {0, 1})).has_value());
  CHECK_FALSE(supremum(d4, d4.none()).has_value());
  CHECK(infimum(d4, S(4, {1, 2})) == 0u);
}

TEST_CASE("upper-set enumeration matches a filter over all subsets") {
  CHECK(enumerate_upper_sets(chain(3)) ==
        std::vector<ElementSet>{S(3, {}), S(3, {2}), S(3, {1, 2}), S(3, {0, 1, 2})});
  CHECK(enumerate_upper_sets(diamond()).size() == 6);
  CHECK(enumerate_upper_sets(antichain(2)).size() == 4);
  CHECK_THROWS_AS(enumerate_upper_sets(antichain(4), 3), BudgetExceeded);
}

TEST_CASE("upper and lower sets are complements of each other") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, false)) {
      const auto ups = enumerate_upper_sets(p);
      const auto downs = enumerate_lower_sets(p);
      REQUIRE(ups.size() == downs.size());
      for (const auto& u : ups) CHECK(is_lower(p, u.complement()));
    }
}

TEST_CASE("closure laws hold on random posets") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = generate(PosetKind::random(seed, 7, 0.35));
    for (Mask a = 0; a < 128; a += 7)
      for (Mask b = 0; b < 128; b += 11) {
        const auto s = p.set(a);
        const auto t = p.set(b);
        CHECK(up_closure(p, up_closure(p, s)) == up_closure(p, s));
        CHECK(s.subset_of(up_closure(p, s)));
        CHECK(up_closure(p, s | t) == (up_closure(p, s) | up_closure(p, t)));
      }
  }
}

TEST_CASE("supremum is the least upper bound; directed sets contain theirs") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, false))
      for (Mask m = 1; m < full_mask(n) + 1; ++m) {
        const auto s = p.set(m);
        const auto sup = supremum(p, s);
        if (sup) {
          for_each_bit(m, [&](std::size_t i) { CHECK(p.leq(i, *sup)); });
          for (std::size_t u = 0; u < n; ++u) {
            bool bound = true;
            for_each_bit(m, [&](std::size_t i) { bound = bound && p.leq(i, u); });
            if (bound) CHECK(p.leq(*sup, u));
          }
        }
        if (is_directed(p, s)) {
          REQUIRE(sup.has_value());
          CHECK(s.contains(*sup));
        }
      }
}

TEST_CASE("generators") {
  CHECK(generate(PosetKind::chain(3)) == chain(3));
  const auto b2 = generate(PosetKind::boolean(2));
  // Powerset of {x,y}: 0 = {}, 1 = {x}, 2 = {y}, 3 = {x,y}; same shape as D4.
  CHECK(b2 == diamond());
  CHECK(canonical_form(b2) == canonical_form(diamond()));
  CHECK(generate(PosetKind::random(7, 5, 0.3)) == generate(PosetKind::random(7, 5, 0.3)));
  CHECK_THROWS_AS(generate(PosetKind::boolean(5)), BadParameters);
  CHECK_THROWS_AS(generate(PosetKind::chain(0)), BadParameters);
  CHECK_THROWS_AS(generate(PosetKind::random(1, 4, 1.5)), BadParameters);
}

TEST_CASE("labeled enumeration matches the brute-force relation filter") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto oracle = brute_force_posets(n);
    std::set<std::vector<Mask>> expected(oracle.begin(), oracle.end());
    std::set<std::vector<Mask>> got;
    const auto posets = enumerate_posets(n, false);
    for (const auto& p : posets) got.insert(p.up_rows());
    CHECK(posets.size() == got.size());  // no duplicates
    CHECK(got == expected);
  }
  CHECK(enumerate_posets(1, false).size() == 1);
  CHECK(enumerate_posets(3, false).size() == 19);
  CHECK(enumerate_posets(4, false).size() == 219);
}

TEST_CASE("every enumerated poset passes validation") {
  for (const auto& p : enumerate_posets(5, false)) {
    CHECK_FALSE(first_order_violation(p.up_rows()).has_value());
  }
  CHECK(enumerate_posets(5, false).size() == 4231);
}

TEST_CASE("iso enumeration agrees with grouping labeled posets by relabeling") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::vector<Mask>> classes;
    for (const auto& rows : brute_force_posets(n))
      classes.insert(canonical_form(Poset::from_valid_rows(rows)));
    CHECK(enumerate_posets(n, true).size() == classes.size());
  }
  CHECK(enumerate_posets(5, true).size() == 63);
  CHECK(enumerate_posets(6, true).size() == 318);
  CHECK_THROWS_AS(enumerate_posets(6, false), BadParameters);
  CHECK_THROWS_AS(enumerate_posets(4, false, 10), BudgetExceeded);
}

TEST_CASE("hasse diagrams and DOT") {
  CHECK(hasse(chain(3)) == std::vector<Pair>{{0, 1}, {1, 2}});
  CHECK(hasse(diamond()).size() == 4);
  CHECK(hasse(antichain(3)).empty());
  const auto dot = export_dot(chain(3), {.shade = S(3, {2})});
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);
  CHECK(dot.find("n2 [label=\"2\", style=filled") != std::string::npos);
}

TEST_CASE("element set parsing and rendering") {
  CHECK(ElementSet::parse("0, 2", 3) == S(3, {0, 2}));
  CHECK(ElementSet::parse("", 3).is_empty());
  CHECK(S(4, {3, 1}).to_string() == "1,3");
  CHECK_THROWS_AS(ElementSet::parse("0,x", 3), ParseError);
  CHECK_THROWS_AS(ElementSet::parse("5", 3), IndexOutOfRange);
}
