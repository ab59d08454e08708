#pragma once

#include <optional>
#include <utility>

#include "orderlab/topology.hpp"

namespace orderlab {

/// Suprema of the directed subsets of the down-closure of A.
ElementSet one_step(const Poset& p, ElementSet a, std::size_t cap = kDefaultEmitCap);

/// Same set, filtering a precomputed list of directed subsets of P.
ElementSet one_step(const Poset& p, ElementSet a, const std::vector<DirectedSup>& directed);

struct OneStepResult {
  /// A' equals the Scott closure of A for every A.
  bool holds = true;
  /// A' is Scott closed for every A; must agree with `holds`.
  bool closed_form_holds = true;
  /// First A where A' differs from its Scott closure.
  std::optional<ElementSet> witness;
};

OneStepResult has_one_step_closure(const Poset& p, std::size_t cap = kDefaultEmitCap);

struct MeetContinuityResult {
  bool holds = true;
  /// First (D, x) with x below sup D but outside cl_sigma(down D n down x).
  std::optional<std::pair<ElementSet, std::size_t>> witness;
};

MeetContinuityResult is_meet_continuous(const Poset& p, std::size_t cap = kDefaultEmitCap);

/// The sandwich, the way-below bound, the fixpoint characterization of Scott
/// closed sets, A' = down A, and the three implications from continuity and
/// one-step closure.
ClosureReport check_one_step_theorems(const Poset& p, std::size_t cap = kDefaultEmitCap);

}  // namespace orderlab
