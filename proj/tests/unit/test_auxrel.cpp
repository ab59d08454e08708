#include <algorithm>
#include <set>

#include "doctest.h"
#include "orderlab/auxrel.hpp"

using namespace orderlab;

namespace {

ElementSet S(std::size_t n, std::initializer_list<std::size_t> xs) { return ElementSet::of(n, xs); }

// Quadruple-loop axiom check over an explicit pair predicate.
template <typename Rel>
bool satisfies_aux_axioms(const Poset& p, Rel rel) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel(x, y)) continue;
      if (!p.leq(x, y)) return false;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t z = 0; z < n; ++z)
          if (p.leq(u, x) && p.leq(y, z) && !rel(u, z)) return false;
    }
  if (auto b = p.bottom())
    for (std::size_t x = 0; x < n; ++x)
      if (!rel(*b, x)) return false;
  return true;
}

// Naive fixpoint: keep applying axiom 2 pair by pair until nothing changes.
std::set<Pair> naive_closure(const Poset& p, std::vector<Pair> seed) {
  std::set<Pair> rel(seed.begin(), seed.end());
  if (auto b = p.bottom())
    for (std::size_t x = 0; x < p.size(); ++x) rel.insert({*b, x});
  bool changed = true;
  while (changed) {
    changed = false;
    const auto snapshot = rel;
    for (auto [x, y] : snapshot)
      for (std::size_t u = 0; u < p.size(); ++u)
        for (std::size_t z = 0; z < p.size(); ++z)
          if (p.leq(u, x) && p.leq(y, z) && rel.insert({u, z}).second) changed = true;
  }
  return rel;
}

std::set<Pair> as_set(const AuxRelation& r) {
  const auto v = r.pairs();
  return {v.begin(), v.end()};
}

const std::vector<Pair> kR1 = {{0, 0}, {0, 1}, {0, 2}, {1, 2}};

}  // namespace

TEST_CASE("validate_aux") {
  const auto c3 = chain(3);
  const auto r1 = validate_aux(c3, kR1);
  CHECK(as_set(r1) == std::set<Pair>(kR1.begin(), kR1.end()));
  try {
    validate_aux(c3, {{0, 1}, {0, 2}, {1, 2}});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::aux_bottom);
    CHECK(e.witness() == Pair{0, 0});
  }
  try {
    validate_aux(c3, {{2, 1}});
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::aux_below_order);
    CHECK(e.witness() == Pair{2, 1});
  }
  CHECK_THROWS_AS(validate_aux(c3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}}), AxiomViolation);
  CHECK_THROWS_AS(validate_aux(c3, {{0, 5}}), IndexOutOfRange);
}

TEST_CASE("aux_closure") {
  const auto c3 = chain(3);
  CHECK(as_set(aux_closure(c3, {{1, 1}})) == std::set<Pair>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}});
  CHECK(as_set(aux_closure(c3, {})) == std::set<Pair>{{0, 0}, {0, 1}, {0, 2}});
  CHECK_THROWS_AS(aux_closure(c3, {{2, 1}}), SeedViolatesOrder);
}

TEST_CASE("aux_closure agrees with a naive fixpoint and passes validation") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = generate(PosetKind::random(seed, 6, 0.4));
    const auto pairs = p.order_pairs();
    std::vector<Pair> chosen;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((seed * 2654435761u >> (k % 29)) & 1u) chosen.push_back(pairs[k]);
    const auto closed = aux_closure(p, chosen);
    CHECK(as_set(closed) == naive_closure(p, chosen));
    CHECK_FALSE(first_aux_violation(p, closed.below_rows()).has_value());
    CHECK(satisfies_aux_axioms(p, [&](std::size_t i, std::size_t j) { return closed.relates(i, j); }));
  }
}

TEST_CASE("way_below on small posets") {
  CHECK(way_below(chain(3)) == order_relation(chain(3)));
  CHECK(way_below(diamond()) == order_relation(diamond()));
  CHECK(way_below(chain(1)).pairs() == std::vector<Pair>{{0, 0}});
}

TEST_CASE("way_below equals the order on every finite poset") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, false))
      CHECK(way_below(p).below_rows() == order_relation(p).below_rows());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = generate(PosetKind::random(seed, 9, 0.3));
    CHECK(way_below(p) == order_relation(p));
  }
}

TEST_CASE("sections") {
  const auto c3 = chain(3);
  const auto r1 = validate_aux(c3, kR1);
  CHECK(section_below(r1, 2) == S(3, {0, 1}));
  CHECK(section_above(bottom_relation(c3), 0) == S(3, {0, 1, 2}));
  const auto d4 = diamond();
  for (std::size_t x = 0; x < 4; ++x)
    CHECK(section_below(order_relation(d4), x) == down_closure(d4, S(4, {x})));
}

TEST_CASE("sections are lower sets; sections above are upper") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n, false))
      for (const auto& r : enumerate_aux(p))
        for (std::size_t x = 0; x < n; ++x) {
          CHECK(is_lower(p, section_below(r, x)));
          CHECK(is_upper(p, section_above(r, x)));
        }
}

TEST_CASE("classify") {
  const auto c3 = chain(3);
  const auto r1 = classify(validate_aux(c3, kR1));
  CHECK(r1.pre_approximating);
  CHECK_FALSE(r1.approximating);
  CHECK(r1.approx_witness == 1u);
  CHECK_FALSE(r1.has_int);
  CHECK(r1.int_witness == Pair{1, 2});

  const auto bot = classify(bottom_relation(c3));
  CHECK(bot.pre_approximating);
  CHECK_FALSE(bot.approximating);
  CHECK(bot.has_int);

  // Sections of the empty relation on an antichain are empty, hence not directed.
  const auto empty = classify(bottom_relation(antichain(2)));
  CHECK_FALSE(empty.pre_approximating);
  CHECK(empty.pre_witness == 0u);
  CHECK_FALSE(empty.approximating);

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, false)) {
      const auto c = classify(order_relation(p));
      CHECK(c.approximating);
      CHECK(c.has_int);
    }
}

TEST_CASE("classification flags are consistent") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n, false))
      for (const auto& r : enumerate_aux(p)) {
        const auto c = classify(r);
        if (c.approximating) CHECK(c.pre_approximating);
      }
}

TEST_CASE("lattice operations") {
  const auto c3 = chain(3);
  const auto r1 = validate_aux(c3, kR1);
  const auto bot = bottom_relation(c3);
  const auto leq = order_relation(c3);
  CHECK(aux_union(bot, r1) == r1);
  CHECK(aux_intersection(r1, leq) == r1);
  CHECK(aux_union(leq, leq) == leq);
  CHECK_THROWS_AS(aux_union(r1, order_relation(diamond())), PosetMismatch);
  CHECK(bot.subset_of(r1));
  CHECK_FALSE(leq.subset_of(r1));
}

TEST_CASE("enumerate_aux matches the brute-force axiom filter") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n, false)) {
      const auto order = p.order_pairs();
      std::set<std::set<Pair>> expected;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << order.size()); ++code) {
        std::set<Pair> rel;
        for (std::size_t k = 0; k < order.size(); ++k)
          if ((code >> k) & 1u) rel.insert(order[k]);
        if (satisfies_aux_axioms(p, [&](std::size_t i, std::size_t j) { return rel.count({i, j}) > 0; }))
          expected.insert(rel);
      }
      std::set<std::set<Pair>> got;
      const auto all = enumerate_aux(p);
      for (const auto& r : all) got.insert(as_set(r));
      CHECK(all.size() == got.size());
      CHECK(got == expected);
    }
  const auto c3 = chain(3);
  const auto on_c3 = enumerate_aux(c3);
  auto contains = [&](const AuxRelation& r) {
    return std::find(on_c3.begin(), on_c3.end(), r) != on_c3.end();
  };
  CHECK(contains(bottom_relation(c3)));
  CHECK(contains(validate_aux(c3, kR1)));
  CHECK(contains(order_relation(c3)));
  const auto on_a2 = enumerate_aux(antichain(2));
  CHECK(on_a2.front().pairs().empty());
  CHECK_THROWS_AS(enumerate_aux(chain(3), 2), BudgetExceeded);
}

TEST_CASE("Aux(P) bounds and closure under union/intersection") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n, false)) {
      const auto all = enumerate_aux(p);
      const auto top = order_relation(p);
      for (const auto& a : all) {
        CHECK(a.subset_of(top));
        if (p.bottom()) CHECK(bottom_relation(p).subset_of(a));
        for (const auto& b : all) {
          CHECK_NOTHROW(aux_union(a, b));
          CHECK_NOTHROW(aux_intersection(a, b));
        }
      }
    }
}

TEST_CASE("way-below is the least approximating relation") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, false)) {
      const auto wb = way_below(p);
      std::vector<Mask> meet(n, full_mask(n));
      for (const auto& r : enumerate_aux(p)) {
        if (!classify(r).approximating) continue;
        CHECK(wb.subset_of(r));
        for (std::size_t x = 0; x < n; ++x) meet[x] &= r.below_row(x);
      }
      CHECK(meet == wb.below_rows());
    }
}

TEST_CASE("basis lemma: a directed approximant inside the way-below section") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, false)) {
      const auto wb = way_below(p);
      for (std::size_t x = 0; x < n; ++x) {
        const auto below = section_below(wb, x);
        for (const auto& d : enumerate_directed_subsets(p, below)) {
          if (supremum(p, d) != x) continue;
          CHECK(is_directed(p, below));
          CHECK(supremum(p, below) == x);
        }
      }
    }
}

TEST_CASE("sample_aux is deterministic and valid") {
  const auto c3 = chain(3);
  CHECK(sample_aux(c3, 1) == sample_aux(c3, 1));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto p = generate(PosetKind::random(seed, 6, 0.3));
    const auto r = sample_aux(p, seed);
    CHECK_FALSE(first_aux_violation(p, r.below_rows()).has_value());
  }
}
