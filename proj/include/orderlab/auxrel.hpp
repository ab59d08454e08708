#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orderlab/poset.hpp"

namespace orderlab {

/// An auxiliary relation on a finite poset.
///
/// Stored column-wise: row j is the section {i : i < j} below j. The three
/// axioms hold for every instance built through validate_aux(),
/// aux_closure() or the lattice operations.
class AuxRelation {
 public:
  const Poset& poset() const { return poset_; }
  std::size_t size() const { return below_.size(); }

  bool relates(std::size_t i, std::size_t j) const { return has(below_[j], i); }

  /// {i : i < x}
  Mask below_row(std::size_t x) const { return below_[x]; }
  const std::vector<Mask>& below_rows() const { return below_; }

  /// Pairs (i, j) with i < j, ordered by (i, j).
  std::vector<Pair> pairs() const;

  bool subset_of(const AuxRelation& other) const;

  friend bool operator==(const AuxRelation& a, const AuxRelation& b) {
    return a.poset_ == b.poset_ && a.below_ == b.below_;
  }

  /// Trusted constructor; callers guarantee the axioms.
  static AuxRelation from_valid_rows(Poset p, std::vector<Mask> below_rows);

 private:
  Poset poset_;
  std::vector<Mask> below_;
};

/// Checks axioms 1 to 3 and returns the relation.
AuxRelation validate_aux(const Poset& p, const std::vector<Pair>& pairs);

/// Raw-row axiom check; returns the first violation (axiom 1, then 2, then 3).
std::optional<AxiomViolation> first_aux_violation(const Poset& p, const std::vector<Mask>& below_rows);

/// Smallest auxiliary relation containing the seed pairs.
AuxRelation aux_closure(const Poset& p, const std::vector<Pair>& seed);

/// The order itself, as an auxiliary relation (the top of Aux(P)).
AuxRelation order_relation(const Poset& p);

/// Closure of the empty seed: {(bottom, x)} when a bottom exists, else empty.
AuxRelation bottom_relation(const Poset& p);

/// Way-below computed straight from the directed-set definition.
AuxRelation way_below(const Poset& p, std::size_t cap = kDefaultEmitCap);

/// s(x) = {y : y < x}
ElementSet section_below(const AuxRelation& r, std::size_t x);
/// {y : x < y}
ElementSet section_above(const AuxRelation& r, std::size_t x);

struct AuxClass {
  bool pre_approximating = false;
  bool approximating = false;
  bool has_int = false;
  /// Element whose section is not directed.
  std::optional<std::size_t> pre_witness;
  /// Element x whose section does not have supremum x.
  std::optional<std::size_t> approx_witness;
  /// Pair x < z with no interpolant.
  std::optional<Pair> int_witness;
};

AuxClass classify(const AuxRelation& r);

AuxRelation aux_union(const AuxRelation& a, const AuxRelation& b);
AuxRelation aux_intersection(const AuxRelation& a, const AuxRelation& b);

/// Every auxiliary relation on p once, ordered by the bit pattern of the
/// selected order pairs (order_pairs() order). Throws BudgetExceeded when
/// more than `budget` relations would be emitted or the order has more than
/// kMaxAuxEnumerationPairs non-forced pairs.
inline constexpr std::size_t kMaxAuxEnumerationPairs = 24;
std::vector<AuxRelation> enumerate_aux(const Poset& p, std::size_t budget = kDefaultEmitCap);

/// Closure of a seed-deterministic random subset of the order pairs.
AuxRelation sample_aux(const Poset& p, std::uint64_t seed);

}  // namespace orderlab
