#include "orderlab/errors.hpp"

namespace orderlab {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::reflexivity: return "reflexivity";
    case Axiom::antisymmetry: return "antisymmetry";
    case Axiom::transitivity: return "transitivity";
    case Axiom::aux_below_order: return "aux-1";
    case Axiom::aux_saturation: return "aux-2";
    case Axiom::aux_bottom: return "aux-3";
  }
  return "unknown";
}

AxiomViolation::AxiomViolation(Axiom axiom, std::size_t first, std::size_t second)
    : Error(std::string("axiom violation (") + axiom_name(axiom) + ") at (" + std::to_string(first) +
            "," + std::to_string(second) + ")"),
      axiom_(axiom),
      first_(first),
      second_(second) {}

SeedViolatesOrder::SeedViolatesOrder(std::size_t i, std::size_t j)
    : Error("seed pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the order"),
      i_(i),
      j_(j) {}

NotPreApproximating::NotPreApproximating(std::size_t x)
    : Error("relation is not pre-approximating: section below " + std::to_string(x) +
            " is not directed"),
      x_(x) {}

NotApproximating::NotApproximating(std::size_t x)
    : Error("relation is not approximating at element " + std::to_string(x)), x_(x) {}

}  // namespace orderlab
