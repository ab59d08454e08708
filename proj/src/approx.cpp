#include "orderlab/approx.hpp"

namespace orderlab {

namespace {

std::string set_witness(const char* name, ElementSet a) { return std::string(name) + "=" + braced(a); }

// First failing set of a predicate over a scope, rendered as a witness.
template <typename Pred>
std::vector<std::string> first_failure(const std::vector<ElementSet>& sets, Pred ok) {
  for (const auto& a : sets) {
    std::string detail;
    if (!ok(a, detail)) {
      std::vector<std::string> w{set_witness("A", a)};
      if (!detail.empty()) w.push_back(detail);
      return w;
    }
  }
  return {};
}

}  // namespace

ElementSet lap(const AuxRelation& r, ElementSet a) {
  Mask out = 0;
  for_each_bit(a.bits(), [&](std::size_t x) {
    if ((r.below_row(x) & a.bits()) != 0) out |= bit(x);
  });
  return r.poset().set(out);
}

ElementSet uap(const AuxRelation& r, ElementSet a) {
  const Mask down = down_closure(r.poset(), a).bits();
  Mask out = 0;
  for (std::size_t x = 0; x < r.size(); ++x)
    if (subset_of(r.below_row(x), down)) out |= bit(x);
  return r.poset().set(out);
}

ElementSet lap_existential(const AuxRelation& r, ElementSet a) {
  Mask out = 0;
  for (std::size_t x = 0; x < r.size(); ++x)
    if ((r.below_row(x) & a.bits()) != 0) out |= bit(x);
  return r.poset().set(out);
}

ElementSet uap_lower_adjoint(const AuxRelation& r, ElementSet b) {
  const Poset& p = r.poset();
  if (!is_lower(p, b)) throw NotLower("set " + braced(b) + " is not a lower set");
  ElementSet out = p.all();
  for (const auto& a : enumerate_lower_sets(p))
    if (b.subset_of(uap(r, a))) out = out & a;
  return out;
}

ElementSet lap_upper_adjoint(const AuxRelation& r, ElementSet b) {
  const Poset& p = r.poset();
  if (!is_upper(p, b)) throw NotUpper("set " + braced(b) + " is not an upper set");
  ElementSet out = p.none();
  for (const auto& a : enumerate_upper_sets(p))
    if (lap(r, a).subset_of(b)) out = out | a;
  return out;
}

SubsetScope SubsetScope::all(const Poset& p) {
  SubsetScope s;
  const std::uint64_t limit = std::uint64_t{1} << p.size();
  s.sets.reserve(limit);
  for (std::uint64_t m = 0; m < limit; ++m) s.sets.push_back(p.set(static_cast<Mask>(m)));
  s.description = "all " + std::to_string(limit) + " subsets";
  return s;
}

SubsetScope SubsetScope::only(ElementSet a) { return {{a}, "A=" + braced(a)}; }

ApproxReport check_partition(const AuxRelation& r, ElementSet a) {
  const Poset& p = r.poset();
  ApproxReport rep;
  rep.subject = "partition";
  const auto low = lap(r, a);
  const auto high = uap(r, a.complement());
  const std::string scope = "A=" + braced(a);
  rep.add("partition.union", scope, (low | high) == p.all(),
          {set_witness("lap(A)", low), set_witness("uap(P\\A)", high)});
  if (is_upper(p, a))
    rep.add("partition.disjoint", scope + " (upper)", (low & high).is_empty(),
            {set_witness("lap(A)", low), set_witness("uap(P\\A)", high)});
  for (auto& v : rep.verdicts)
    if (v.pass) v.witnesses.clear();
  return rep;
}

ApproxReport check_basic_laws(const AuxRelation& r, const SubsetScope& scope) {
  const Poset& p = r.poset();
  const auto& sets = scope.sets;
  ApproxReport rep;
  rep.subject = "basic-laws";

  rep.add("sandwich", scope.description, true,
          first_failure(sets, [&](ElementSet a, std::string&) {
            return lap(r, a).subset_of(a) && a.subset_of(uap(r, a));
          }));
  rep.add("uap-down-closure", scope.description, true,
          first_failure(sets, [&](ElementSet a, std::string&) {
            return uap(r, a) == uap(r, down_closure(p, a));
          }));
  rep.add("uap-lower", scope.description, true,
          first_failure(sets, [&](ElementSet a, std::string&) { return is_lower(p, uap(r, a)); }));
  rep.add("lap-upper", scope.description + ", upper members", true,
          first_failure(sets, [&](ElementSet a, std::string&) {
            return !is_upper(p, a) || is_upper(p, lap(r, a));
          }));
  rep.add("lap-membership", scope.description, true,
          first_failure(sets, [&](ElementSet a, std::string& detail) {
            // x in lap(A) iff x in A and some y in A has y < x.
            for (std::size_t x = 0; x < p.size(); ++x) {
              bool exists = false;
              for (std::size_t y = 0; y < p.size(); ++y) exists = exists || (a.contains(y) && r.relates(y, x));
              if (lap(r, a).contains(x) != (a.contains(x) && exists)) {
                detail = "x=" + std::to_string(x);
                return false;
              }
            }
            return true;
          }));
  {
    std::vector<std::string> w;
    for (std::size_t x = 0; x < p.size() && w.empty(); ++x)
      if (lap(r, up_closure(p, ElementSet::of(p.size(), {x}))) != section_above(r, x))
        w.push_back("a=" + std::to_string(x));
    rep.add("lap-of-principal-upset", "all elements", true, std::move(w));
  }
  {
    std::vector<std::string> w;
    if (!lap(r, p.none()).is_empty()) w.push_back("lap({}) nonempty");
    if (uap(r, p.all()) != p.all()) w.push_back("uap(P) != P");
    rep.add("empty-and-whole", "A in {{}, P}", true, std::move(w));
  }
  {
    bool sections_nonempty = true;
    for (std::size_t x = 0; x < p.size(); ++x) sections_nonempty = sections_nonempty && r.below_row(x) != 0;
    const bool uap_empty = uap(r, p.none()).is_empty();
    const bool lap_whole = lap(r, p.all()) == p.all();
    std::vector<std::string> w;
    if (!(sections_nonempty == uap_empty && uap_empty == lap_whole))
      w.push_back("sections-nonempty=" + std::to_string(sections_nonempty) +
                  " uap({})={}:" + std::to_string(uap_empty) + " lap(P)=P:" + std::to_string(lap_whole));
    rep.add("whole-space-equivalence", "relation", true, std::move(w));
    rep.statements.push_back({"sections-nonempty", sections_nonempty});
  }
  if (r == order_relation(p)) {
    rep.add("order-identities", scope.description, true,
            first_failure(sets, [&](ElementSet a, std::string&) {
              return lap(r, a) == a && uap(r, a) == down_closure(p, a);
            }));
  }
  for (auto& v : rep.verdicts) v.pass = v.witnesses.empty();
  return rep;
}

ApproxReport check_adjunctions(const AuxRelation& r) {
  const Poset& p = r.poset();
  ApproxReport rep;
  rep.subject = "adjunctions";
  const auto lowers = enumerate_lower_sets(p);
  const auto uppers = enumerate_upper_sets(p);

  std::vector<std::string> w_lower;
  for (const auto& b : lowers) {
    const auto g = uap_lower_adjoint(r, b);
    if (!is_lower(p, g)) {
      w_lower = {set_witness("B", b), "g(B) not lower"};
      break;
    }
    for (const auto& a : lowers)
      if (b.subset_of(uap(r, a)) != g.subset_of(a)) {
        w_lower = {set_witness("B", b), set_witness("A", a), set_witness("g(B)", g)};
        break;
      }
    if (!w_lower.empty()) break;
  }
  rep.add("adjoint.lower", "B, A over all " + std::to_string(lowers.size()) + " lower sets",
          w_lower.empty(), w_lower);

  std::vector<std::string> w_upper;
  for (const auto& b : uppers) {
    const auto h = lap_upper_adjoint(r, b);
    if (!is_upper(p, h)) {
      w_upper = {set_witness("B", b), "h(B) not upper"};
      break;
    }
    for (const auto& a : uppers)
      if (lap(r, a).subset_of(b) != a.subset_of(h)) {
        w_upper = {set_witness("B", b), set_witness("A", a), set_witness("h(B)", h)};
        break;
      }
    if (!w_upper.empty()) break;
  }
  rep.add("adjoint.upper", "B, A over all " + std::to_string(uppers.size()) + " upper sets",
          w_upper.empty(), w_upper);
  return rep;
}

ApproxReport check_int_equivalences(const AuxRelation& r) {
  const Poset& p = r.poset();
  ApproxReport rep;
  rep.subject = "int-char";
  const auto uppers = enumerate_upper_sets(p);
  const auto lowers = enumerate_lower_sets(p);
  std::vector<std::string> witnesses;

  const auto cls = classify(r);
  const bool s1 = cls.has_int;
  if (!s1 && cls.int_witness)
    witnesses.push_back("int fails at (" + std::to_string(cls.int_witness->first) + "," +
                        std::to_string(cls.int_witness->second) + ")");

  bool s2 = true;
  for (const auto& a : uppers) {
    const auto l = lap(r, a);
    const auto ll = lap(r, l);
    if (ll != l) {
      s2 = false;
      witnesses.push_back(set_witness("A", a) + ": lap(lap(A))=" + braced(ll) + " != lap(A)=" + braced(l));
      break;
    }
  }

  // Kernel operator on U(P): self-map, monotone, deflationary, idempotent.
  bool s3 = true;
  for (const auto& a : uppers) {
    const auto l = lap(r, a);
    if (!is_upper(p, l) || !l.subset_of(a) || lap(r, l) != l) {
      s3 = false;
      witnesses.push_back("kernel fails at " + set_witness("A", a));
      break;
    }
    for (const auto& b : uppers)
      if (a.subset_of(b) && !l.subset_of(lap(r, b))) {
        s3 = false;
        witnesses.push_back("lap not monotone at " + set_witness("A", a) + ", " + set_witness("B", b));
        break;
      }
    if (!s3) break;
  }

  bool s4 = true;
  for (const auto& b : lowers) {
    const auto u = uap(r, b);
    const auto uu = uap(r, u);
    if (uu != u) {
      s4 = false;
      witnesses.push_back(set_witness("B", b) + ": uap(uap(B))=" + braced(uu) + " != uap(B)=" + braced(u));
      break;
    }
  }

  // Closure operator on L(P): self-map, monotone, inflationary, idempotent.
  bool s5 = true;
  for (const auto& a : lowers) {
    const auto u = uap(r, a);
    if (!is_lower(p, u) || !a.subset_of(u) || uap(r, u) != u) {
      s5 = false;
      witnesses.push_back("closure fails at " + set_witness("B", a));
      break;
    }
    for (const auto& b : lowers)
      if (a.subset_of(b) && !u.subset_of(uap(r, b))) {
        s5 = false;
        witnesses.push_back("uap not monotone at " + set_witness("A", a) + ", " + set_witness("B", b));
        break;
      }
    if (!s5) break;
  }

  rep.statements = {{"int", s1}, {"lap-idempotent", s2}, {"lap-kernel", s3}, {"uap-idempotent", s4},
                    {"uap-closure", s5}};
  const bool agree = s1 == s2 && s2 == s3 && s3 == s4 && s4 == s5;
  rep.add("int-char.equivalence",
          std::to_string(uppers.size()) + " upper sets, " + std::to_string(lowers.size()) + " lower sets",
          agree, witnesses);
  return rep;
}

ApproxReport check_algebra(const AuxRelation& r1, const AuxRelation& r2, const SubsetScope& scope) {
  if (!(r1.poset() == r2.poset())) throw PosetMismatch();
  const Poset& p = r1.poset();
  const auto join = aux_union(r1, r2);
  const auto meet = aux_intersection(r1, r2);
  const auto& sets = scope.sets;
  ApproxReport rep;
  rep.subject = "algebra";

  const bool le12 = r1.subset_of(r2);
  const bool le21 = r2.subset_of(r1);
  if (le12 || le21) {
    const AuxRelation& small = le12 ? r1 : r2;
    const AuxRelation& big = le12 ? r2 : r1;
    rep.add("relation-monotone", scope.description, true,
            first_failure(sets, [&](ElementSet a, std::string&) {
              return lap(small, a).subset_of(lap(big, a)) && uap(big, a).subset_of(uap(small, a));
            }));
  } else {
    rep.add("relation-monotone", "incomparable relations (vacuous)", true);
  }
  rep.add("uap-union", scope.description, true,
          first_failure(sets, [&](ElementSet a, std::string&) {
            return (uap(r1, a) & uap(r2, a)) == uap(join, a);
          }));
  rep.add("lap-union", scope.description, true,
          first_failure(sets, [&](ElementSet a, std::string&) {
            return (lap(r1, a) | lap(r2, a)) == lap(join, a);
          }));
  rep.add("lap-filtered-intersection", scope.description + ", filtered members", true,
          first_failure(sets, [&](ElementSet a, std::string&) {
            return !is_filtered(p, a) || (lap(r1, a) & lap(r2, a)) == lap(meet, a);
          }));

  const auto lowers = enumerate_lower_sets(p);
  const auto uppers = enumerate_upper_sets(p);
  std::vector<std::string> w_meet;
  std::vector<std::string> w_join;
  for (const AuxRelation* r : {&r1, &r2}) {
    const char* which = r == &r1 ? "R1" : "R2";
    for (const auto& a : lowers)
      for (const auto& b : lowers)
        if (w_meet.empty() && uap(*r, a & b) != (uap(*r, a) & uap(*r, b)))
          w_meet = {which, set_witness("A", a), set_witness("B", b)};
    for (const auto& a : uppers)
      for (const auto& b : uppers)
        if (w_join.empty() && lap(*r, a | b) != (lap(*r, a) | lap(*r, b)))
          w_join = {which, set_witness("A", a), set_witness("B", b)};
  }
  rep.add("uap-preserves-intersections", "pairs of lower sets", true, std::move(w_meet));
  rep.add("lap-preserves-unions", "pairs of upper sets", true, std::move(w_join));
  for (auto& v : rep.verdicts) v.pass = v.witnesses.empty();
  return rep;
}

}  // namespace orderlab
