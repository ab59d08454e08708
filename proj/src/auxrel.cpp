#include "orderlab/auxrel.hpp"

#include <random>

namespace orderlab {

namespace {

// Rows forced by axiom 2: u <= x < y <= z gives u < z, i.e. row z must
// contain the down-closure of every row y <= z.
std::vector<Mask> saturate(const Poset& p, const std::vector<Mask>& below) {
  std::vector<Mask> out(below.size(), 0);
  for (std::size_t z = 0; z < below.size(); ++z) {
    Mask acc = 0;
    for_each_bit(p.down_row(z), [&](std::size_t y) { acc |= below[y]; });
    out[z] = down_closure(p, p.set(acc)).bits();
  }
  return out;
}

void require_same_poset(const AuxRelation& a, const AuxRelation& b) {
  if (!(a.poset() == b.poset())) throw PosetMismatch();
}

}  // namespace

AuxRelation AuxRelation::from_valid_rows(Poset p, std::vector<Mask> below_rows) {
  AuxRelation r;
  r.poset_ = std::move(p);
  r.below_ = std::move(below_rows);
  return r;
}

std::vector<Pair> AuxRelation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (relates(i, j)) out.emplace_back(i, j);
  return out;
}

bool AuxRelation::subset_of(const AuxRelation& other) const {
  require_same_poset(*this, other);
  for (std::size_t j = 0; j < size(); ++j)
    if (!orderlab::subset_of(below_[j], other.below_[j])) return false;
  return true;
}

std::optional<AxiomViolation> first_aux_violation(const Poset& p, const std::vector<Mask>& below) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (has(below[j], i) && !p.leq(i, j)) return AxiomViolation(Axiom::aux_below_order, i, j);
  const auto forced = saturate(p, below);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t z = 0; z < n; ++z)
      if (has(forced[z], u) && !has(below[z], u)) return AxiomViolation(Axiom::aux_saturation, u, z);
  if (auto b = p.bottom())
    for (std::size_t x = 0; x < n; ++x)
      if (!has(below[x], *b)) return AxiomViolation(Axiom::aux_bottom, *b, x);
  return std::nullopt;
}

AuxRelation validate_aux(const Poset& p, const std::vector<Pair>& pairs) {
  std::vector<Mask> below(p.size(), 0);
  for (auto [i, j] : pairs) {
    if (i >= p.size() || j >= p.size())
      throw IndexOutOfRange("relation pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside universe of size " + std::to_string(p.size()));
    below[j] |= bit(i);
  }
  if (auto v = first_aux_violation(p, below)) throw *v;
  return AuxRelation::from_valid_rows(p, std::move(below));
}

AuxRelation aux_closure(const Poset& p, const std::vector<Pair>& seed) {
  std::vector<Mask> below(p.size(), 0);
  for (auto [i, j] : seed) {
    if (i >= p.size() || j >= p.size())
      throw IndexOutOfRange("seed pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside universe of size " + std::to_string(p.size()));
    if (!p.leq(i, j)) throw SeedViolatesOrder(i, j);
    below[j] |= bit(i);
  }
  if (auto b = p.bottom())
    for (auto& row : below) row |= bit(*b);
  // One pass reaches the fixpoint because the order is transitive.
  return AuxRelation::from_valid_rows(p, saturate(p, below));
}

AuxRelation order_relation(const Poset& p) {
  std::vector<Mask> below(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) below[x] = p.down_row(x);
  return AuxRelation::from_valid_rows(p, std::move(below));
}

AuxRelation bottom_relation(const Poset& p) { return aux_closure(p, {}); }

AuxRelation way_below(const Poset& p, std::size_t cap) {
  // x << y iff x lies below some member of every directed D with sup D >= y.
  std::vector<Mask> below(p.size(), full_mask(p.size()));
  for (const auto& [d, sup] : directed_with_suprema(p, cap)) {
    const Mask reach = down_closure(p, d).bits();
    for_each_bit(p.down_row(sup), [&](std::size_t y) { below[y] &= reach; });
  }
  if (auto v = first_aux_violation(p, below)) throw *v;
  return AuxRelation::from_valid_rows(p, std::move(below));
}

ElementSet section_below(const AuxRelation& r, std::size_t x) {
  if (x >= r.size()) throw IndexOutOfRange("element " + std::to_string(x) + " outside universe");
  return r.poset().set(r.below_row(x));
}

ElementSet section_above(const AuxRelation& r, std::size_t x) {
  if (x >= r.size()) throw IndexOutOfRange("element " + std::to_string(x) + " outside universe");
  Mask out = 0;
  for (std::size_t y = 0; y < r.size(); ++y)
    if (r.relates(x, y)) out |= bit(y);
  return r.poset().set(out);
}

AuxClass classify(const AuxRelation& r) {
  const Poset& p = r.poset();
  AuxClass c;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto s = section_below(r, x);
    const bool directed = is_directed(p, s);
    if (!directed && !c.pre_witness) c.pre_witness = x;
    if ((!directed || supremum(p, s) != x) && !c.approx_witness) c.approx_witness = x;
  }
  c.pre_approximating = !c.pre_witness;
  c.approximating = !c.approx_witness;

  c.has_int = true;
  for (std::size_t z = 0; z < p.size() && c.has_int; ++z) {
    Mask interpolable = 0;
    for_each_bit(r.below_row(z), [&](std::size_t y) { interpolable |= r.below_row(y); });
    const Mask stuck = r.below_row(z) & ~interpolable;
    if (stuck != 0) {
      c.has_int = false;
      c.int_witness = Pair{static_cast<std::size_t>(std::countr_zero(stuck)), z};
    }
  }
  return c;
}

AuxRelation aux_union(const AuxRelation& a, const AuxRelation& b) {
  require_same_poset(a, b);
  std::vector<Mask> rows(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) rows[j] = a.below_row(j) | b.below_row(j);
  if (auto v = first_aux_violation(a.poset(), rows)) throw *v;
  return AuxRelation::from_valid_rows(a.poset(), std::move(rows));
}

AuxRelation aux_intersection(const AuxRelation& a, const AuxRelation& b) {
  require_same_poset(a, b);
  std::vector<Mask> rows(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) rows[j] = a.below_row(j) & b.below_row(j);
  if (auto v = first_aux_violation(a.poset(), rows)) throw *v;
  return AuxRelation::from_valid_rows(a.poset(), std::move(rows));
}

std::vector<AuxRelation> enumerate_aux(const Poset& p, std::size_t budget) {
  const auto forced = bottom_relation(p);
  std::vector<Pair> free;
  for (auto [i, j] : p.order_pairs())
    if (!forced.relates(i, j)) free.emplace_back(i, j);
  if (free.size() > kMaxAuxEnumerationPairs)
    throw BudgetExceeded("auxiliary-relation enumeration limited to " +
                         std::to_string(kMaxAuxEnumerationPairs) + " free order pairs");
  std::vector<AuxRelation> out;
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  std::vector<Mask> rows(p.size());
  for (std::uint64_t code = 0; code < limit; ++code) {
    rows = forced.below_rows();
    for (std::size_t k = 0; k < free.size(); ++k)
      if ((code >> k) & 1u) rows[free[k].second] |= bit(free[k].first);
    // A candidate is kept iff it equals its own closure, i.e. it is saturated.
    if (saturate(p, rows) != rows) continue;
    if (out.size() == budget)
      throw BudgetExceeded("auxiliary-relation enumeration exceeded budget " + std::to_string(budget));
    out.push_back(AuxRelation::from_valid_rows(p, rows));
  }
  return out;
}

AuxRelation sample_aux(const Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double density = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  std::vector<Pair> chosen;
  for (auto pr : p.order_pairs())
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) chosen.push_back(pr);
  return aux_closure(p, chosen);
}

}  // namespace orderlab
