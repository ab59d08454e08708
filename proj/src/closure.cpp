#include "orderlab/closure.hpp"

namespace orderlab {

namespace {

std::string set_witness(const char* name, ElementSet a) { return std::string(name) + "=" + braced(a); }

bool is_closed(const Topology& t, ElementSet a) { return t.is_open(a.complement()); }

}  // namespace

ElementSet one_step(const Poset& p, ElementSet a, const std::vector<DirectedSup>& directed) {
  const auto down = down_closure(p, a);
  Mask out = 0;
  for (const auto& d : directed)
    if (d.set.subset_of(down)) out |= bit(d.sup);
  return p.set(out);
}

ElementSet one_step(const Poset& p, ElementSet a, std::size_t cap) {
  Mask out = 0;
  for (const auto& d : enumerate_directed_subsets(p, down_closure(p, a), cap))
    if (auto s = supremum(p, d)) out |= bit(*s);
  return p.set(out);
}

OneStepResult has_one_step_closure(const Poset& p, std::size_t cap) {
  const auto directed = directed_with_suprema(p, cap);
  const auto sigma = scott_topology(p, cap);
  OneStepResult res;
  for (const auto& a : SubsetScope::all(p).sets) {
    const auto prime = one_step(p, a, directed);
    if (prime != closure(sigma, a)) {
      res.holds = false;
      if (!res.witness) res.witness = a;
    }
    if (!is_closed(sigma, prime)) res.closed_form_holds = false;
  }
  return res;
}

MeetContinuityResult is_meet_continuous(const Poset& p, std::size_t cap) {
  const auto sigma = scott_topology(p, cap);
  MeetContinuityResult res;
  for (const auto& d : directed_with_suprema(p, cap)) {
    const auto below_d = down_closure(p, d.set);
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.leq(x, d.sup)) continue;
      const auto meet = below_d & p.set(p.down_row(x));
      if (!closure(sigma, meet).contains(x)) {
        res.holds = false;
        res.witness = {d.set, x};
        return res;
      }
    }
  }
  return res;
}

ClosureReport check_one_step_theorems(const Poset& p, std::size_t cap) {
  const auto directed = directed_with_suprema(p, cap);
  const auto sigma = scott_topology(p, cap);
  const auto wb = way_below(p, cap);
  const auto sets = SubsetScope::all(p).sets;
  const std::string scope = "all " + std::to_string(sets.size()) + " subsets";
  ClosureReport rep;
  rep.subject = "one-step";

  std::vector<std::string> w_sandwich, w_uap, w_fix, w_trivial;
  for (const auto& a : sets) {
    const auto down = down_closure(p, a);
    const auto prime = one_step(p, a, directed);
    const auto cl = closure(sigma, a);
    if (w_sandwich.empty() && !(a.subset_of(down) && down.subset_of(prime) && prime.subset_of(cl)))
      w_sandwich = {set_witness("A", a), set_witness("A'", prime), set_witness("cl_sigma(A)", cl)};
    if (w_uap.empty() && !prime.subset_of(uap(wb, a)))
      w_uap = {set_witness("A", a), set_witness("A'", prime), set_witness("uap(A)", uap(wb, a))};
    if (w_fix.empty() && (prime == a) != is_closed(sigma, a))
      w_fix = {set_witness("A", a), set_witness("A'", prime)};
    if (w_trivial.empty() && prime != down) w_trivial = {set_witness("A", a), set_witness("A'", prime)};
  }
  rep.add("one-step.sandwich", scope, w_sandwich.empty(), w_sandwich).label = "finite-trivial";
  rep.add("one-step.one-step-in-uap", scope, w_uap.empty(), w_uap).label = "finite-trivial";
  rep.add("one-step.fixpoint-iff-scott-closed", scope, w_fix.empty(), w_fix).label = "finite-trivial";
  rep.add("one-step.one-step-is-down-closure", scope, w_trivial.empty(), w_trivial).label = "finite-trivial";

  const bool continuous = classify(wb).approximating;
  const auto one = has_one_step_closure(p, cap);
  const auto meet = is_meet_continuous(p, cap);

  rep.add("one-step.one-step-forms-agree", scope, one.holds == one.closed_form_holds,
          one.holds == one.closed_form_holds ? std::vector<std::string>{}
                                             : std::vector<std::string>{"A'=cl_sigma(A) for all A: " +
                                                                        std::to_string(one.holds)})
      .label = "finite-trivial";

  std::vector<std::string> w;
  if (continuous && !one.holds) w = {set_witness("A", *one.witness)};
  rep.add("one-step.continuous-implies-one-step", "poset", w.empty(), w).label = "finite-trivial";

  w.clear();
  if (one.holds && !meet.holds)
    w = {set_witness("D", meet.witness->first), "x=" + std::to_string(meet.witness->second)};
  rep.add("one-step.one-step-implies-meet-continuous", "poset", w.empty(), w).label = "finite-trivial";

  w.clear();
  if (one.holds)
    for (std::size_t x = 0; x < p.size() && w.empty(); ++x) {
      const auto up = p.set(p.up_row(x));
      if (interior(sigma, up) != section_above(wb, x)) w = {"x=" + std::to_string(x)};
    }
  rep.add("one-step.one-step-implies-upset-interior", "all elements", w.empty(), w).label = "finite-trivial";

  rep.statements = {{"continuous", continuous}, {"one-step-closure", one.holds}, {"meet-continuous", meet.holds}};
  return rep;
}

}  // namespace orderlab
