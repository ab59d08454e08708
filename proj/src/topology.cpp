#include "orderlab/topology.hpp"

#include <algorithm>

namespace orderlab {

namespace {

// Constructor-time validation is quadratic in the number of opens.
constexpr std::size_t kMaxValidatedOpens = 2048;

std::string set_witness(const char* name, ElementSet a) { return std::string(name) + "=" + braced(a); }

bool contains_set(const std::vector<ElementSet>& sorted, ElementSet a) {
  return std::binary_search(sorted.begin(), sorted.end(), a,
                            [](ElementSet l, ElementSet r) { return l.bits() < r.bits(); });
}

void require_pre(const AuxClass& cls) {
  if (!cls.pre_approximating) throw NotPreApproximating(cls.pre_witness.value_or(0));
}

std::vector<ElementSet> all_subsets(const Poset& p) { return SubsetScope::all(p).sets; }

}  // namespace

Topology::Topology(Poset p, std::vector<ElementSet> opens) : poset_(std::move(p)), opens_(std::move(opens)) {
  for (const auto& o : opens_)
    if (o.universe() != poset_.size()) throw InvalidTopology("open set " + braced(o) + " has the wrong universe");
  std::sort(opens_.begin(), opens_.end(), [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (opens_.size() <= kMaxValidatedOpens)
    if (auto v = first_topology_violation(poset_.size(), opens_)) throw InvalidTopology(*v);
}

bool Topology::is_open(ElementSet a) const { return contains_set(opens_, a); }

bool Topology::operator==(const Topology& other) const {
  return poset_ == other.poset_ && opens_ == other.opens_;
}

std::optional<std::string> first_topology_violation(std::size_t n, const std::vector<ElementSet>& opens) {
  std::vector<ElementSet> sorted = opens;
  std::sort(sorted.begin(), sorted.end(), [](ElementSet a, ElementSet b) { return a.bits() < b.bits(); });
  if (!contains_set(sorted, ElementSet{0, n})) return "empty set is not open";
  if (!contains_set(sorted, ElementSet{full_mask(n), n})) return "universe is not open";
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!contains_set(sorted, sorted[i] & sorted[j]))
        return "intersection of " + braced(sorted[i]) + " and " + braced(sorted[j]) + " is not open";
      if (!contains_set(sorted, sorted[i] | sorted[j]))
        return "union of " + braced(sorted[i]) + " and " + braced(sorted[j]) + " is not open";
    }
  return std::nullopt;
}

Topology mu_topology(const AuxRelation& r) {
  require_pre(classify(r));
  std::vector<ElementSet> opens;
  for (const auto& u : enumerate_upper_sets(r.poset()))
    if (lap(r, u) == u) opens.push_back(u);
  return {r.poset(), std::move(opens)};
}

bool is_scott_open(const Poset& p, ElementSet u, const std::vector<DirectedSup>& directed) {
  if (!is_upper(p, u)) return false;
  for (const auto& d : directed)
    if (u.contains(d.sup) && (d.set & u).is_empty()) return false;
  return true;
}

bool is_scott_open(const Poset& p, ElementSet u, std::size_t cap) {
  return is_scott_open(p, u, directed_with_suprema(p, cap));
}

Topology scott_topology(const Poset& p, std::size_t cap) {
  const auto directed = directed_with_suprema(p, cap);
  std::vector<ElementSet> opens;
  for (const auto& u : enumerate_upper_sets(p, cap))
    if (is_scott_open(p, u, directed)) opens.push_back(u);
  return {p, std::move(opens)};
}

ElementSet interior(const Topology& t, ElementSet a) {
  Mask out = 0;
  for (const auto& o : t.opens())
    if (o.subset_of(a)) out |= o.bits();
  return t.poset().set(out);
}

ElementSet closure(const Topology& t, ElementSet a) { return interior(t, a.complement()).complement(); }

Specialization specialization_order(const Topology& t) {
  const std::size_t n = t.poset().size();
  Specialization s;
  s.up_rows.assign(n, full_mask(n));
  for (const auto& o : t.opens())
    for_each_bit(o.bits(), [&](std::size_t x) { s.up_rows[x] &= o.bits(); });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (s.leq(x, y) && s.leq(y, x)) s.t0 = false;
  return s;
}

const char* upset_mode_name(UpsetMode m) {
  return m == UpsetMode::specialization ? "specialization" : "underlying";
}

CSpaceResult is_c_space(const Topology& t, UpsetMode mode) {
  const Poset& p = t.poset();
  const std::size_t n = p.size();
  std::vector<Mask> ups(n);
  if (mode == UpsetMode::specialization) {
    ups = specialization_order(t).up_rows;
  } else {
    for (std::size_t y = 0; y < n; ++y) ups[y] = p.up_row(y);
  }
  // reach[x] = {y : x in int(up y)}
  std::vector<Mask> reach(n, 0);
  for (std::size_t y = 0; y < n; ++y)
    for_each_bit(interior(t, p.set(ups[y])).bits(), [&](std::size_t x) { reach[x] |= bit(y); });

  CSpaceResult res;
  for (std::size_t x = 0; x < n && res.holds; ++x)
    for (const auto& u : t.opens())
      if (u.contains(x) && (u.bits() & reach[x]) == 0) {
        res.holds = false;
        res.witness = {x, u};
        break;
      }
  return res;
}

bool opens_completely_distributive(const Topology& t) {
  const auto& o = t.opens();
  if (o.size() > kMaxDistributivityOpens)
    throw BudgetExceeded("distributivity check over " + std::to_string(o.size()) + " opens exceeds " +
                         std::to_string(kMaxDistributivityOpens));
  for (const auto& a : o)
    for (const auto& b : o)
      for (const auto& c : o) {
        if ((a & (b | c)) != ((a & b) | (a & c))) return false;
        if ((a | (b & c)) != ((a | b) & (a | c))) return false;
      }
  return true;
}

std::array<ElementSet, 7> containment_chain(const AuxRelation& r, ElementSet a) {
  const auto sigma = scott_topology(r.poset());
  const auto mu = mu_topology(r);
  return {interior(sigma, a), interior(mu, a), lap(r, a), a, uap(r, a), closure(mu, a), closure(sigma, a)};
}

ApproxReport check_chain_of_containments(const AuxRelation& r, ElementSet a) {
  const auto cls = classify(r);
  if (!cls.approximating) throw NotApproximating(cls.approx_witness.value_or(0));
  static const char* const names[7] = {"int_sigma(A)", "int_mu(A)", "lap(A)", "A", "uap(A)", "cl_mu(A)",
                                       "cl_sigma(A)"};
  static const char* const laws[6] = {"chain.int-sigma-in-int-mu", "chain.int-mu-in-lap", "chain.lap-in-a",
                                      "chain.a-in-uap", "chain.uap-in-cl-mu", "chain.cl-mu-in-cl-sigma"};
  const auto c = containment_chain(r, a);
  ApproxReport rep;
  rep.subject = "chain";
  const std::string scope = "A=" + braced(a);
  for (std::size_t k = 0; k < 6; ++k) {
    const bool ok = c[k].subset_of(c[k + 1]);
    rep.add(laws[k], scope, ok,
            ok ? std::vector<std::string>{}
               : std::vector<std::string>{set_witness(names[k], c[k]), set_witness(names[k + 1], c[k + 1])});
  }
  const bool l1 = c[1].subset_of(c[2]);
  rep.add("lemma.int-mu-in-lap", scope, l1,
          l1 ? std::vector<std::string>{} : std::vector<std::string>{set_witness(names[1], c[1])});
  const bool l2 = c[4].subset_of(c[5]);
  rep.add("lemma.uap-in-cl-mu", scope, l2,
          l2 ? std::vector<std::string>{} : std::vector<std::string>{set_witness(names[4], c[4])});
  return rep;
}

ApproxReport check_continuity_characterization(const Poset& p, const std::optional<AuxRelation>& candidate,
                                               std::size_t budget) {
  if (candidate && !(candidate->poset() == p)) throw PosetMismatch();
  ApproxReport rep;
  rep.subject = "continuity";
  const auto wb = way_below(p, budget);
  const auto sigma = scott_topology(p, budget);
  const auto uppers = enumerate_upper_sets(p, budget);
  const auto lowers = enumerate_lower_sets(p, budget);

  const auto lap_matches = [&](const AuxRelation& r) {
    return std::all_of(uppers.begin(), uppers.end(),
                       [&](ElementSet a) { return lap(r, a) == interior(sigma, a); });
  };
  const auto uap_matches = [&](const AuxRelation& r) {
    return std::all_of(lowers.begin(), lowers.end(),
                       [&](ElementSet a) { return uap(r, a) == closure(sigma, a); });
  };

  std::vector<std::string> witnesses;
  const bool s1 = classify(wb).approximating;
  const bool s2 = lap_matches(wb);
  const bool s4 = uap_matches(wb);

  // Existential statements: the candidate first, then way-below, then the
  // full enumeration only if neither settles it.
  const auto exists = [&](const auto& matches, const char* tag) {
    if (candidate && classify(*candidate).approximating && matches(*candidate)) {
      witnesses.push_back(std::string(tag) + " witness: candidate relation");
      return true;
    }
    if (matches(wb)) {
      witnesses.push_back(std::string(tag) + " witness: way-below");
      return true;
    }
    for (const auto& r : enumerate_aux(p, budget))
      if (classify(r).approximating && matches(r)) {
        witnesses.push_back(std::string(tag) + " witness: enumerated relation");
        return true;
      }
    return false;
  };
  const bool s3 = exists(lap_matches, "s3");
  const bool s5 = exists(uap_matches, "s5");

  rep.statements = {{"continuous", s1}, {"lap-way-below-is-interior", s2}, {"exists-lap-interior", s3},
                    {"uap-way-below-is-closure", s4}, {"exists-uap-closure", s5}};
  if (candidate) {
    const bool approx = classify(*candidate).approximating;
    rep.statements.push_back({"s3-instance", approx && lap_matches(*candidate)});
    rep.statements.push_back({"s5-instance", approx && uap_matches(*candidate)});
  }
  const bool agree = s1 == s2 && s2 == s3 && s3 == s4 && s4 == s5;
  auto& v = rep.add("continuity.equivalence", std::to_string(uppers.size()) + " upper sets, " +
                                                   std::to_string(lowers.size()) + " lower sets",
                    agree, witnesses);
  v.label = "finite-trivial";

  std::vector<std::string> w;
  for (const auto& a : all_subsets(p)) {
    const auto cl = closure(sigma, a);
    const auto down = down_closure(p, a);
    for (std::size_t x = 0; x < p.size() && w.empty(); ++x)
      if (cl.contains(x) != section_below(wb, x).subset_of(down))
        w = {set_witness("A", a), "x=" + std::to_string(x)};
    if (!w.empty()) break;
  }
  auto& c = rep.add("continuity.scott-closed", "all " + std::to_string(std::size_t{1} << p.size()) + " subsets",
                    w.empty(), w);
  c.label = "finite-trivial";
  return rep;
}

ApproxReport check_cspace_theorems(const AuxRelation& r) {
  const auto cls = classify(r);
  require_pre(cls);
  const Poset& p = r.poset();
  const auto mu = mu_topology(r);
  const auto spec = specialization_order(mu);
  const auto cs_spec = is_c_space(mu, UpsetMode::specialization);
  const auto cs_under = is_c_space(mu, UpsetMode::underlying);
  ApproxReport rep;
  rep.subject = "cspace";
  const std::string scope = "mu with " + std::to_string(mu.size()) + " opens";

  const auto describe = [](const char* mode, const CSpaceResult& c) {
    std::string s = std::string(mode) + ":" + (c.holds ? "c-space" : "not c-space");
    if (c.witness) s += " at x=" + std::to_string(c.witness->first) + ", U=" + braced(c.witness->second);
    return s;
  };

  if (cls.has_int) {
    const bool ok = cs_spec.holds && cs_under.holds;
    rep.add("cspace.int-implies-cspace", scope, ok,
            ok ? std::vector<std::string>{}
               : std::vector<std::string>{describe("specialization", cs_spec), describe("underlying", cs_under)});
    std::vector<std::string> w;
    for (std::size_t x = 0; x < p.size() && w.empty(); ++x)
      if (!mu.is_open(section_above(r, x))) w.push_back("section above " + std::to_string(x) + " is not open");
    for (const auto& u : mu.opens()) {
      if (!w.empty()) break;
      Mask covered = 0;
      for (std::size_t y = 0; y < p.size(); ++y) {
        const auto s = section_above(r, y);
        if (u.contains(y) && s.subset_of(u)) covered |= s.bits();
      }
      if (covered != u.bits()) w = {set_witness("U", u), "base sets inside U cover " + braced(p.set(covered))};
    }
    rep.add("cspace.base-lemma", scope, w.empty(), w);
  } else {
    rep.add("cspace.int-implies-cspace", "INT fails (vacuous)", true);
  }

  {
    auto& v = rep.add("cspace.converse", scope + ", both up-set modes", true);
    if ((cs_spec.holds || cs_under.holds) && !cls.approximating) {
      v.witnesses = {describe("specialization", cs_spec), describe("underlying", cs_under),
                     "not approximating at x=" + std::to_string(cls.approx_witness.value_or(0)),
                     std::string("T0=") + (spec.t0 ? "true" : "false")};
      v.finding = "c-space does not imply approximating here";
    }
  }

  std::optional<bool> cdl;
  if (cls.has_int) {
    auto& v = rep.add("cspace.cdl-corollary", scope + ", INT holds", true);
    if (mu.size() <= kMaxDistributivityOpens) {
      cdl = opens_completely_distributive(mu);
      if (*cdl != cls.approximating) {
        v.witnesses = {std::string("completely-distributive=") + (*cdl ? "true" : "false"),
                       std::string("approximating=") + (cls.approximating ? "true" : "false"),
                       std::string("T0=") + (spec.t0 ? "true" : "false")};
        v.finding = "approximating and complete distributivity of opens disagree";
      }
    } else {
      v.label = "skipped";
      v.scope += ", skipped: more than " + std::to_string(kMaxDistributivityOpens) + " opens";
    }
  }

  {
    const bool continuous = classify(way_below(p)).approximating;
    const auto sigma = scott_topology(p);
    const bool sig_spec = is_c_space(sigma, UpsetMode::specialization).holds;
    const bool sig_under = is_c_space(sigma, UpsetMode::underlying).holds;
    const bool ok = continuous == sig_spec && continuous == sig_under;
    auto& v = rep.add("cspace.classical", "Scott topology, both up-set modes", ok,
                      ok ? std::vector<std::string>{}
                         : std::vector<std::string>{std::string("continuous=") + (continuous ? "true" : "false"),
                                                    std::string("c-space(specialization)=") +
                                                        (sig_spec ? "true" : "false"),
                                                    std::string("c-space(underlying)=") +
                                                        (sig_under ? "true" : "false")});
    v.label = "finite-trivial";
  }

  rep.statements = {{"int", cls.has_int},
                    {"approximating", cls.approximating},
                    {"cspace-specialization", cs_spec.holds},
                    {"cspace-underlying", cs_under.holds},
                    {"t0", spec.t0}};
  if (cdl) rep.statements.push_back({"completely-distributive", *cdl});
  return rep;
}

ApproxReport check_mu_inaccessibility(const AuxRelation& r) {
  const auto cls = classify(r);
  require_pre(cls);
  const Poset& p = r.poset();
  const auto mu = mu_topology(r);
  ApproxReport rep;
  rep.subject = "mu-inaccessibility";

  // First x whose section has a supremum inside U while the section misses U.
  const auto inaccessible = [&](ElementSet u) -> std::optional<std::size_t> {
    for (std::size_t x = 0; x < p.size(); ++x) {
      const auto s = section_below(r, x);
      const auto sup = supremum(p, s);
      if (sup && u.contains(*sup) && (s & u).is_empty()) return x;
    }
    return std::nullopt;
  };

  std::vector<std::string> w;
  for (const auto& u : mu.opens()) {
    if (!is_upper(p, u)) {
      w = {set_witness("U", u), "not upper"};
      break;
    }
    if (auto x = inaccessible(u)) {
      w = {set_witness("U", u), "x=" + std::to_string(*x)};
      break;
    }
  }
  rep.add("mu.open-implies-inaccessible", "all " + std::to_string(mu.size()) + " opens", w.empty(), w);

  if (cls.approximating) {
    w.clear();
    for (const auto& u : enumerate_upper_sets(p))
      if (!inaccessible(u) && !mu.is_open(u)) {
        w = {set_witness("U", u)};
        break;
      }
    rep.add("mu.inaccessible-implies-open", "all upper sets", w.empty(), w);
  }
  return rep;
}

ApproxReport check_interior_closure_laws(const Topology& t) {
  const Poset& p = t.poset();
  ApproxReport rep;
  rep.subject = "interior-closure";
  const auto sets = all_subsets(p);
  const std::string scope = "all " + std::to_string(sets.size()) + " subsets";

  std::vector<std::string> w_idem, w_dual, w_bounds;
  std::vector<ElementSet> ints;
  ints.reserve(sets.size());
  for (const auto& a : sets) {
    const auto i = interior(t, a);
    const auto c = closure(t, a);
    ints.push_back(i);
    if (w_idem.empty() && (interior(t, i) != i || closure(t, c) != c)) w_idem = {set_witness("A", a)};
    if (w_dual.empty() && c.complement() != interior(t, a.complement())) w_dual = {set_witness("A", a)};
    if (w_bounds.empty() && !(i.subset_of(a) && a.subset_of(c) && t.is_open(i))) w_bounds = {set_witness("A", a)};
  }
  rep.add("interior.idempotent", scope, w_idem.empty(), w_idem);
  rep.add("interior.complement-duality", scope, w_dual.empty(), w_dual);
  rep.add("interior.bounds", scope, w_bounds.empty(), w_bounds);

  // Pairwise law: all pairs up to 8 elements, otherwise pairs (A, P\A).
  std::vector<std::string> w_meet;
  std::string pair_scope;
  if (p.size() <= 8) {
    pair_scope = "all pairs of subsets";
    for (std::size_t i = 0; i < sets.size() && w_meet.empty(); ++i)
      for (std::size_t j = i; j < sets.size(); ++j)
        if (interior(t, sets[i] & sets[j]) != (ints[i] & ints[j])) {
          w_meet = {set_witness("A", sets[i]), set_witness("B", sets[j])};
          break;
        }
  } else {
    pair_scope = "pairs (A, complement of A)";
    for (std::size_t i = 0; i < sets.size() && w_meet.empty(); ++i) {
      const auto b = sets[i].complement();
      if (interior(t, sets[i] & b) != (ints[i] & ints[b.bits()]))
        w_meet = {set_witness("A", sets[i]), set_witness("B", b)};
    }
  }
  rep.add("interior.preserves-intersections", pair_scope, w_meet.empty(), w_meet);
  return rep;
}

ApproxReport check_mu_topology(const AuxRelation& r) {
  const auto cls = classify(r);
  require_pre(cls);
  const Poset& p = r.poset();
  const auto mu = mu_topology(r);
  const auto sigma = scott_topology(p);
  ApproxReport rep;
  rep.subject = "mu-topology";

  const auto violation = first_topology_violation(p.size(), mu.opens());
  rep.add("mu.invariants", std::to_string(mu.size()) + " opens", !violation,
          violation ? std::vector<std::string>{*violation} : std::vector<std::string>{});

  if (cls.approximating) {
    std::vector<std::string> w;
    for (const auto& u : sigma.opens())
      if (!mu.is_open(u)) {
        w = {set_witness("U", u) + " is Scott open but not open in mu"};
        break;
      }
    rep.add("mu.finer-than-scott", "all Scott opens", w.empty(), w);
    const auto spec = specialization_order(mu);
    const bool same = spec.up_rows == p.up_rows();
    rep.add("mu.order-compatible", "specialization order", same,
            same ? std::vector<std::string>{} : std::vector<std::string>{"specialization order differs from <="});
  }

  {
    const auto wb = way_below(p);
    const auto mu_wb = mu_topology(wb);
    const auto uppers = enumerate_upper_sets(p);
    const bool ok = mu_wb == sigma && sigma.opens() == uppers;
    auto& v = rep.add("mu.way-below-is-scott", "poset", ok,
                      ok ? std::vector<std::string>{}
                         : std::vector<std::string>{"mu(way-below) has " + std::to_string(mu_wb.size()) +
                                                    " opens, Scott has " + std::to_string(sigma.size()) +
                                                    ", upper sets " + std::to_string(uppers.size())});
    v.label = "finite-trivial";

    std::vector<std::string> w;
    for (std::size_t x = 0; x < p.size() && w.empty(); ++x) {
      const auto up = up_closure(p, ElementSet::of(p.size(), {x}));
      if (interior(sigma, up) != section_above(wb, x) || section_above(wb, x) != up)
        w = {"x=" + std::to_string(x)};
    }
    auto& u = rep.add("mu.upset-interior", "all elements", w.empty(), w);
    u.label = "finite-trivial";

    w.clear();
    for (const auto& a : uppers)
      if (lap(wb, a) == a && !sigma.is_open(a)) {
        w = {set_witness("U", a)};
        break;
      }
    rep.add("mu.way-below-open-is-scott-open", "all upper sets", w.empty(), w);
  }

  rep.merge(check_interior_closure_laws(mu));
  return rep;
}

}  // namespace orderlab
