#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orderlab/element_set.hpp"
#include "orderlab/errors.hpp"

namespace orderlab {

using Pair = std::pair<std::size_t, std::size_t>;

enum class RelationMode { full_order, covers };

/// A finite partial order on {0, ..., n-1}.
///
/// Row i of the order holds {j : i <= j}. Instances are only produced by
/// validate_poset() and the generators, so every Poset satisfies the three
/// order axioms.
class Poset {
 public:
  std::size_t size() const { return up_.size(); }

  bool leq(std::size_t i, std::size_t j) const { return has(up_[i], j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  /// {j : i <= j}
  Mask up_row(std::size_t i) const { return up_[i]; }
  /// {j : j <= i}
  Mask down_row(std::size_t i) const { return down_[i]; }
  const std::vector<Mask>& up_rows() const { return up_; }

  ElementSet all() const { return ElementSet::all(size()); }
  ElementSet none() const { return ElementSet::empty(size()); }
  ElementSet set(Mask bits) const { return {bits, size()}; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of element i, or its index when the poset is unlabeled.
  std::string label(std::size_t i) const;
  Poset with_labels(std::vector<std::string> labels) const;

  /// Least element, if any.
  std::optional<std::size_t> bottom() const { return bottom_; }

  /// All pairs (i, j) with i <= j, ordered by (i, j).
  std::vector<Pair> order_pairs() const;

  /// Order equality; labels are ignored.
  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

  /// Trusted constructor for callers that already hold a valid order matrix.
  static Poset from_valid_rows(std::vector<Mask> up_rows);

 private:
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::string> labels_;
  std::optional<std::size_t> bottom_;
};

/// Builds a poset from an explicit relation. In full-order mode the pairs
/// must already form a partial order; in covers mode the reflexive-transitive
/// closure is taken first and only antisymmetry can fail.
Poset validate_poset(std::size_t n, const std::vector<Pair>& pairs, RelationMode mode);

/// Checks the three order axioms on raw rows (reflexivity, then
/// antisymmetry, then transitivity); returns the first violation.
std::optional<AxiomViolation> first_order_violation(const std::vector<Mask>& up_rows);

ElementSet up_closure(const Poset& p, ElementSet s);
ElementSet down_closure(const Poset& p, ElementSet s);
bool is_upper(const Poset& p, ElementSet s);
bool is_lower(const Poset& p, ElementSet s);

/// Nonempty and every pair has an upper bound inside the set. Pairwise
/// checking is sufficient because the set is finite.
bool is_directed(const Poset& p, ElementSet s);
bool is_filtered(const Poset& p, ElementSet s);

/// Least upper bound of s; none for the empty set or when no least upper
/// bound exists.
std::optional<std::size_t> supremum(const Poset& p, ElementSet s);
std::optional<std::size_t> infimum(const Poset& p, ElementSet s);

/// Default cap on the number of sets any enumeration may emit.
inline constexpr std::size_t kDefaultEmitCap = std::size_t{1} << 22;

/// Upper sets in ascending bit order. Throws BudgetExceeded past `cap`.
std::vector<ElementSet> enumerate_upper_sets(const Poset& p, std::size_t cap = kDefaultEmitCap);
std::vector<ElementSet> enumerate_lower_sets(const Poset& p, std::size_t cap = kDefaultEmitCap);

inline constexpr std::size_t kMaxDirectedUniverse = 20;

/// Directed subsets of `within` (default: the whole universe), ascending.
std::vector<ElementSet> enumerate_directed_subsets(const Poset& p, std::size_t cap = kDefaultEmitCap);
std::vector<ElementSet> enumerate_directed_subsets(const Poset& p, ElementSet within,
                                                   std::size_t cap = kDefaultEmitCap);

/// A directed subset together with its supremum (when the supremum exists).
struct DirectedSup {
  ElementSet set;
  std::size_t sup;
};
std::vector<DirectedSup> directed_with_suprema(const Poset& p, std::size_t cap = kDefaultEmitCap);

// --- generators ------------------------------------------------------------

struct PosetKind {
  enum class Tag { chain, antichain, diamond, boolean, random, explicit_ };
  Tag tag = Tag::chain;
  std::size_t n = 1;          // chain, antichain, random
  std::size_t k = 0;          // boolean(k)
  std::uint64_t seed = 0;     // random
  double edge_prob = 0.5;     // random

  static PosetKind chain(std::size_t n) { return {Tag::chain, n}; }
  static PosetKind antichain(std::size_t n) { return {Tag::antichain, n}; }
  static PosetKind diamond() { return {Tag::diamond, 4}; }
  static PosetKind boolean(std::size_t k) { return {Tag::boolean, std::size_t{1} << k, k}; }
  static PosetKind random(std::uint64_t seed, std::size_t n, double p) {
    return {Tag::random, n, 0, seed, p};
  }
};

inline constexpr std::size_t kMaxBooleanRank = 4;

Poset generate(const PosetKind& kind);

inline Poset chain(std::size_t n) { return generate(PosetKind::chain(n)); }
inline Poset antichain(std::size_t n) { return generate(PosetKind::antichain(n)); }
inline Poset diamond() { return generate(PosetKind::diamond()); }

inline constexpr std::size_t kMaxLabeledEnumeration = 5;
inline constexpr std::size_t kMaxIsoEnumeration = 6;

/// Every labeled poset on n elements once, or one canonical representative
/// per isomorphism class. Iso mode emits canonical forms sorted ascending.
std::vector<Poset> enumerate_posets(std::size_t n, bool up_to_iso,
                                    std::size_t cap = kDefaultEmitCap);

/// Lexicographically minimal row matrix over all relabelings.
std::vector<Mask> canonical_form(const Poset& p);

// --- rendering ---------------------------------------------------------------

/// Cover pairs (i, j): i < j with nothing strictly between. Sorted.
std::vector<Pair> hasse(const Poset& p);

struct DotOptions {
  std::optional<ElementSet> shade;
  std::string name = "poset";
};

std::string export_dot(const Poset& p, const DotOptions& opts = {});

}  // namespace orderlab
