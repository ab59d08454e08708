#pragma once

#include <string>
#include <vector>

#include "orderlab/auxrel.hpp"
#include "orderlab/report.hpp"

namespace orderlab {

/// Lower approximation: {x in A : the section below x meets A}.
ElementSet lap(const AuxRelation& r, ElementSet a);

/// Upper approximation: {x : the section below x lies inside the down-closure of A}.
ElementSet uap(const AuxRelation& r, ElementSet a);

/// {x : some y in A has y < x}. Agrees with lap() on upper sets but can leave
/// A otherwise; only used where the existential form is what is meant.
ElementSet lap_existential(const AuxRelation& r, ElementSet a);

/// Lower adjoint of uap on the lattice of lower sets:
/// the intersection of every lower A with B inside uap(A).
ElementSet uap_lower_adjoint(const AuxRelation& r, ElementSet b);

/// Upper adjoint of lap on the lattice of upper sets:
/// the union of every upper A with lap(A) inside B.
ElementSet lap_upper_adjoint(const AuxRelation& r, ElementSet b);

/// Subsets a checker quantifies over, in ascending bit order.
struct SubsetScope {
  std::vector<ElementSet> sets;
  std::string description;

  static SubsetScope all(const Poset& p);
  static SubsetScope only(ElementSet a);
};

/// lap(A) and uap(P \ A) cover P; they are disjoint when A is upper.
ApproxReport check_partition(const AuxRelation& r, ElementSet a);

/// Sandwich, down-closure invariance, upper/lower preservation, the
/// whole-space equivalences, membership characterization and the
/// order-relation identities.
ApproxReport check_basic_laws(const AuxRelation& r, const SubsetScope& scope);

/// Both Galois laws, quantified over the full lattices of lower/upper sets.
ApproxReport check_adjunctions(const AuxRelation& r);

/// Evaluates the five interpolation statements and checks they agree:
/// statements "int", "lap-idempotent", "lap-kernel", "uap-idempotent",
/// "uap-closure".
ApproxReport check_int_equivalences(const AuxRelation& r);

/// Monotonicity in the relation, the union/intersection laws, and
/// preservation of intersections of lower sets / unions of upper sets.
ApproxReport check_algebra(const AuxRelation& r1, const AuxRelation& r2, const SubsetScope& scope);

}  // namespace orderlab
