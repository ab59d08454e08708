#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/approx.hpp"

namespace orderlab {

/// A finite topology on a poset, stored as its deduplicated list of opens in
/// ascending bit order.
class Topology {
 public:
  /// Sorts and deduplicates `opens`; throws InvalidTopology if the family is
  /// not a topology.
  Topology(Poset p, std::vector<ElementSet> opens);

  const Poset& poset() const { return poset_; }
  const std::vector<ElementSet>& opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }
  bool is_open(ElementSet a) const;

  bool operator==(const Topology& other) const;

 private:
  Poset poset_;
  std::vector<ElementSet> opens_;
};

/// First missing invariant of an open family, rendered as text.
std::optional<std::string> first_topology_violation(std::size_t n, const std::vector<ElementSet>& opens);

/// Upper sets U with lap(U) = U. Throws NotPreApproximating.
Topology mu_topology(const AuxRelation& r);

/// Literal check: U upper and every directed D with sup D in U meets U.
bool is_scott_open(const Poset& p, ElementSet u, std::size_t cap = kDefaultEmitCap);
bool is_scott_open(const Poset& p, ElementSet u, const std::vector<DirectedSup>& directed);
Topology scott_topology(const Poset& p, std::size_t cap = kDefaultEmitCap);

ElementSet interior(const Topology& t, ElementSet a);
ElementSet closure(const Topology& t, ElementSet a);

/// Specialization preorder: row x = {y : every open containing x contains y}.
struct Specialization {
  std::vector<Mask> up_rows;
  bool t0 = true;

  bool leq(std::size_t x, std::size_t y) const { return has(up_rows[x], y); }
};

Specialization specialization_order(const Topology& t);

enum class UpsetMode { specialization, underlying };

const char* upset_mode_name(UpsetMode m);

struct CSpaceResult {
  bool holds = true;
  /// First (x, U) with no y in U such that x lies in int(up y).
  std::optional<std::pair<std::size_t, ElementSet>> witness;
};

CSpaceResult is_c_space(const Topology& t, UpsetMode mode = UpsetMode::specialization);

/// Largest open family the distributivity triple loop accepts.
inline constexpr std::size_t kMaxDistributivityOpens = 1024;

/// Distributive law over all triples of opens. Throws BudgetExceeded.
bool opens_completely_distributive(const Topology& t);

/// int_sigma(A), int_mu(A), lap(A), A, uap(A), cl_mu(A), cl_sigma(A).
std::array<ElementSet, 7> containment_chain(const AuxRelation& r, ElementSet a);

/// Each link of the containment chain and the two interior/closure lemmas.
/// Throws NotApproximating.
ApproxReport check_chain_of_containments(const AuxRelation& r, ElementSet a);

/// The five equivalent statements characterizing continuous posets and the
/// Scott-closed-set characterization. `candidate` is tried first for the
/// existential statements and reported as "s3-instance" / "s5-instance".
ApproxReport check_continuity_characterization(const Poset& p,
                                               const std::optional<AuxRelation>& candidate = std::nullopt,
                                               std::size_t budget = kDefaultEmitCap);

/// INT implies c-space with the base lemma (asserted), the converse and the
/// distributivity corollary (findings), and the classical Scott-space case
/// (asserted). Throws NotPreApproximating.
ApproxReport check_cspace_theorems(const AuxRelation& r);

/// Opens are inaccessible by suprema of sections; the converse when
/// approximating. Throws NotPreApproximating.
ApproxReport check_mu_inaccessibility(const AuxRelation& r);

/// Topology invariants of mu, comparison with the Scott topology, order
/// compatibility, and the interior/closure laws.
ApproxReport check_mu_topology(const AuxRelation& r);

/// Idempotence, intersection preservation and complement duality of
/// interior/closure over every subset.
ApproxReport check_interior_closure_laws(const Topology& t);

}  // namespace orderlab
