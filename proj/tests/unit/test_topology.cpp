#include <functional>

#include "doctest.h"
#include "orderlab/topology.hpp"

using namespace orderlab;

namespace {

ElementSet S(std::size_t n, std::initializer_list<std::size_t> xs) { return ElementSet::of(n, xs); }

AuxRelation r1_on_c3() { return validate_aux(chain(3), {{0, 0}, {0, 1}, {0, 2}, {1, 2}}); }

bool upper_oracle(const Poset& p, Mask m) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (has(m, x) && p.leq(x, y) && !has(m, y)) return false;
  return true;
}

// Opens of mu from the definition: upper U where every x in U has some y in U with y < x.
std::vector<ElementSet> mu_oracle(const AuxRelation& r) {
  const Poset& p = r.poset();
  std::vector<ElementSet> out;
  for (Mask m = 0; m <= full_mask(p.size()); ++m) {
    if (!upper_oracle(p, m)) continue;
    bool open = true;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!has(m, x)) continue;
      bool found = false;
      for (std::size_t y = 0; y < p.size(); ++y) found = found || (has(m, y) && r.relates(y, x));
      open = open && found;
    }
    if (open) out.push_back(p.set(m));
  }
  return out;
}

// Largest open inside A, found by scanning opens for maximality.
ElementSet interior_oracle(const Topology& t, ElementSet a) {
  ElementSet best = t.poset().none();
  for (const auto& o : t.opens())
    if (o.subset_of(a) && best.subset_of(o)) best = o;
  return best;
}

bool cspace_oracle(const Topology& t, const std::vector<Mask>& ups) {
  const std::size_t n = t.poset().size();
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& u : t.opens()) {
      if (!u.contains(x)) continue;
      bool found = false;
      for (std::size_t y = 0; y < n; ++y)
        found = found || (u.contains(y) && interior_oracle(t, t.poset().set(ups[y])).contains(x));
      if (!found) return false;
    }
  return true;
}

void pre_instances(std::size_t max_n, const std::function<void(const AuxRelation&)>& f) {
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const auto& p : enumerate_posets(n, false))
      for (const auto& r : enumerate_aux(p))
        if (classify(r).pre_approximating) f(r);
}

}  // namespace

TEST_CASE("topology invariants are enforced") {
  const auto p = antichain(2);
  CHECK_THROWS_AS(Topology(p, {S(2, {}), S(2, {0})}), InvalidTopology);
  CHECK_NOTHROW(Topology(p, {S(2, {}), S(2, {0}), S(2, {1}), S(2, {0, 1})}));
  CHECK(first_topology_violation(2, {S(2, {}), S(2, {0}), S(2, {0, 1})}) == std::nullopt);
  CHECK(first_topology_violation(3, {S(3, {}), S(3, {0}), S(3, {1}), S(3, {0, 1, 2})}).has_value());
  const Topology dup(p, {S(2, {0, 1}), S(2, {}), S(2, {0, 1})});
  CHECK(dup.size() == 2);
}

TEST_CASE("mu topology examples") {
  const auto c3 = chain(3);
  CHECK(mu_topology(r1_on_c3()).opens() == std::vector<ElementSet>{S(3, {}), S(3, {0, 1, 2})});
  CHECK(mu_topology(bottom_relation(c3)).opens() == std::vector<ElementSet>{S(3, {}), S(3, {0, 1, 2})});
  for (const auto& p : {c3, diamond(), antichain(3), generate(PosetKind::boolean(3))})
    CHECK(mu_topology(way_below(p)).opens() == enumerate_upper_sets(p));
  CHECK_THROWS_AS(mu_topology(bottom_relation(antichain(2))), NotPreApproximating);
}

TEST_CASE("mu topology matches the definition oracle, n <= 3") {
  pre_instances(3, [](const AuxRelation& r) { CHECK(mu_topology(r).opens() == mu_oracle(r)); });
}

TEST_CASE("scott topology examples") {
  CHECK(scott_topology(chain(3)).size() == 4);
  const auto d4 = diamond();
  CHECK(is_scott_open(d4, S(4, {1, 3})));
  CHECK_FALSE(is_scott_open(d4, S(4, {1})));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, true)) CHECK(scott_topology(p).opens() == enumerate_upper_sets(p));
}

TEST_CASE("interior and closure examples") {
  const auto sigma = scott_topology(chain(3));
  CHECK(interior(sigma, S(3, {1})).is_empty());
  CHECK(closure(sigma, S(3, {1})) == S(3, {0, 1}));
  CHECK(interior(sigma, S(3, {})).is_empty());
  CHECK(closure(sigma, S(3, {})).is_empty());
  const auto mu = mu_topology(r1_on_c3());
  CHECK(interior(mu, S(3, {1, 2})).is_empty());
  CHECK(closure(mu, S(3, {1, 2})) == S(3, {0, 1, 2}));
}

TEST_CASE("interior agrees with the maximal-open oracle and obeys its laws") {
  pre_instances(3, [](const AuxRelation& r) {
    const auto mu = mu_topology(r);
    for (Mask m = 0; m <= full_mask(r.size()); ++m) CHECK(interior(mu, r.poset().set(m)) == interior_oracle(mu, r.poset().set(m)));
    CHECK(check_interior_closure_laws(mu).passed());
  });
}

TEST_CASE("specialization order examples") {
  const auto c3 = chain(3);
  const auto s = specialization_order(scott_topology(c3));
  CHECK(s.up_rows == c3.up_rows());
  CHECK(s.t0);
  const auto m = specialization_order(mu_topology(r1_on_c3()));
  CHECK_FALSE(m.t0);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) CHECK(m.leq(x, y));
  for (const auto& p : {c3, diamond(), antichain(3)})
    CHECK(specialization_order(mu_topology(order_relation(p))).up_rows == p.up_rows());
}

TEST_CASE("c-space examples and oracle") {
  const auto c3 = chain(3);
  for (const auto& p : {c3, diamond(), antichain(3)}) {
    CHECK(is_c_space(scott_topology(p)).holds);
    CHECK(is_c_space(scott_topology(p), UpsetMode::underlying).holds);
  }
  const auto mu_bot = mu_topology(bottom_relation(c3));
  CHECK(is_c_space(mu_bot, UpsetMode::specialization).holds);
  CHECK(is_c_space(mu_bot, UpsetMode::underlying).holds);

  // {}, {2}, P on antichain(3): x=0 in P needs y with 0 in int(up y).
  const auto a3 = antichain(3);
  const Topology t(a3, {S(3, {}), S(3, {2}), S(3, {0, 1, 2})});
  CHECK(is_c_space(t, UpsetMode::specialization).holds == cspace_oracle(t, specialization_order(t).up_rows));
  const auto under = is_c_space(t, UpsetMode::underlying);
  CHECK_FALSE(under.holds);
  REQUIRE(under.witness.has_value());
  CHECK(under.witness->first == 0);
  CHECK(under.witness->second == S(3, {0, 1, 2}));
  const Topology discrete(a3, enumerate_upper_sets(a3));
  CHECK(is_c_space(discrete).holds);

  pre_instances(3, [](const AuxRelation& r) {
    const auto mu = mu_topology(r);
    std::vector<Mask> under_rows;
    for (std::size_t y = 0; y < r.size(); ++y) under_rows.push_back(r.poset().up_row(y));
    CHECK(is_c_space(mu, UpsetMode::underlying).holds == cspace_oracle(mu, under_rows));
    CHECK(is_c_space(mu, UpsetMode::specialization).holds ==
          cspace_oracle(mu, specialization_order(mu).up_rows));
  });
}

TEST_CASE("complete distributivity") {
  const auto c3 = chain(3);
  CHECK(opens_completely_distributive(mu_topology(r1_on_c3())));
  CHECK(opens_completely_distributive(scott_topology(c3)));
  const auto sa = scott_topology(antichain(2));
  CHECK(sa.size() == 4);
  CHECK(opens_completely_distributive(sa));
  CHECK_THROWS_AS(opens_completely_distributive(scott_topology(antichain(11))), BudgetExceeded);
}

TEST_CASE("chain of containments examples") {
  const auto d4 = diamond();
  const auto c = containment_chain(order_relation(d4), S(4, {1}));
  const std::array<ElementSet, 7> expected{S(4, {}), S(4, {}), S(4, {1}), S(4, {1}),
                                           S(4, {0, 1}), S(4, {0, 1}), S(4, {0, 1})};
  CHECK(c == expected);
  CHECK(check_chain_of_containments(order_relation(d4), S(4, {1})).passed());
  for (const auto& x : containment_chain(order_relation(d4), d4.all())) CHECK(x == d4.all());

  const auto c3 = chain(3);
  const auto w = containment_chain(way_below(c3), S(3, {2}));
  const std::array<ElementSet, 7> expected_wb{S(3, {2}), S(3, {2}), S(3, {2}), S(3, {2}),
                                              c3.all(), c3.all(), c3.all()};
  CHECK(w == expected_wb);
  CHECK_THROWS_AS(check_chain_of_containments(bottom_relation(c3), S(3, {2})), NotApproximating);
  CHECK(check_chain_of_containments(way_below(c3), S(3, {2})).verdicts.size() == 8);
}

TEST_CASE("chain of containments over all approximating relations, n <= 3") {
  pre_instances(3, [](const AuxRelation& r) {
    if (!classify(r).approximating) return;
    for (Mask m = 0; m <= full_mask(r.size()); ++m) CHECK(check_chain_of_containments(r, r.poset().set(m)).passed());
  });
}

TEST_CASE("continuity characterization") {
  const auto c3 = chain(3);
  auto rep = check_continuity_characterization(c3, r1_on_c3());
  CHECK(rep.passed());
  for (const char* s : {"continuous", "lap-way-below-is-interior", "exists-lap-interior",
                        "uap-way-below-is-closure", "exists-uap-closure"})
    CHECK(rep.statement(s) == true);
  CHECK(rep.statement("s3-instance") == false);
  CHECK(check_continuity_characterization(chain(1)).passed());
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n, true)) CHECK(check_continuity_characterization(p).passed());
}

TEST_CASE("c-space theorems on the fixtures") {
  const auto c3 = chain(3);
  auto rep = check_cspace_theorems(bottom_relation(c3));
  CHECK(rep.passed());
  CHECK(rep.has_findings());
  const auto* conv = rep.find("cspace.converse");
  REQUIRE(conv != nullptr);
  CHECK(conv->finding.has_value());
  CHECK(rep.statement("int") == true);
  CHECK(rep.statement("approximating") == false);
  CHECK(rep.statement("cspace-specialization") == true);
  CHECK(rep.statement("cspace-underlying") == true);
  CHECK(rep.find("cspace.base-lemma")->pass);
  const auto* cdl = rep.find("cspace.cdl-corollary");
  REQUIRE(cdl != nullptr);
  CHECK(cdl->finding.has_value());

  rep = check_cspace_theorems(order_relation(diamond()));
  CHECK(rep.passed());
  CHECK_FALSE(rep.has_findings());
  CHECK(mu_topology(order_relation(diamond())) == scott_topology(diamond()));

  for (const auto& p : {c3, diamond(), antichain(3)}) {
    rep = check_cspace_theorems(way_below(p));
    CHECK(rep.passed());
    CHECK_FALSE(rep.has_findings());
  }
  CHECK_THROWS_AS(check_cspace_theorems(bottom_relation(antichain(2))), NotPreApproximating);
}

TEST_CASE("c-space theorems assert cleanly over every pre-approximating relation, n <= 3") {
  pre_instances(3, [](const AuxRelation& r) {
    const auto rep = check_cspace_theorems(r);
    CHECK(rep.passed());
    // Findings occur exactly when mu is a c-space but the relation is not approximating.
    const bool cs = rep.statement("cspace-specialization").value() || rep.statement("cspace-underlying").value();
    CHECK(rep.find("cspace.converse")->finding.has_value() == (cs && !classify(r).approximating));
  });
}

TEST_CASE("mu inaccessibility") {
  const auto c3 = chain(3);
  auto rep = check_mu_inaccessibility(r1_on_c3());
  CHECK(rep.passed());
  CHECK(rep.find("mu.inaccessible-implies-open") == nullptr);
  rep = check_mu_inaccessibility(order_relation(diamond()));
  CHECK(rep.passed());
  CHECK(rep.find("mu.inaccessible-implies-open") != nullptr);
  rep = check_mu_inaccessibility(bottom_relation(c3));
  CHECK(rep.passed());
  CHECK(rep.find("mu.inaccessible-implies-open") == nullptr);
  pre_instances(3, [](const AuxRelation& r) { CHECK(check_mu_inaccessibility(r).passed()); });
}

TEST_CASE("mu topology property suite, n <= 3 plus samples") {
  pre_instances(3, [](const AuxRelation& r) { CHECK(check_mu_topology(r).passed()); });
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = generate(PosetKind::random(seed, 5, 0.4));
    const auto r = sample_aux(p, seed);
    if (classify(r).pre_approximating) CHECK(check_mu_topology(r).passed());
  }
}
