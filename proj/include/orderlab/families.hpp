#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/closure.hpp"

namespace orderlab {

/// Built-in infinite families.
///
/// ladder: columns a(i,0) < a(i,1) < ... with supremum b(i), a chain
/// b(0) < b(1) < ... with supremum top. a(i,j) <= b(k) iff i <= k.
///
/// omega: nat(0) < nat(1) < ... with supremum omega.
enum class FamilyId { ladder, omega };

const char* family_name(FamilyId f);
FamilyId parse_family(const std::string& name);

enum class TermKind { a, b, top, nat, omega };

/// One element of a family, written as a text term: "a(2,7)", "b(0)", "top",
/// "nat(4)", "omega".
struct FamilyElement {
  FamilyId family = FamilyId::ladder;
  TermKind kind = TermKind::top;
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  static FamilyElement a(std::uint64_t i, std::uint64_t j) { return {FamilyId::ladder, TermKind::a, i, j}; }
  static FamilyElement b(std::uint64_t i) { return {FamilyId::ladder, TermKind::b, i, 0}; }
  static FamilyElement top() { return {FamilyId::ladder, TermKind::top, 0, 0}; }
  static FamilyElement nat(std::uint64_t k) { return {FamilyId::omega, TermKind::nat, k, 0}; }
  static FamilyElement omega() { return {FamilyId::omega, TermKind::omega, 0, 0}; }

  /// Throws ParseError on malformed text, ForeignElement if the constructor
  /// is not in the family's signature.
  static FamilyElement parse(FamilyId family, const std::string& text);
  std::string to_string() const;

  auto operator<=>(const FamilyElement&) const = default;
};

/// A chain named in the family's structure together with its supremum.
/// Members are indexed 0, 1, 2, ... and increase strictly.
struct DeclaredChain {
  std::string name;
  std::function<FamilyElement(std::uint64_t)> member;
  FamilyElement sup;
};

/// Declared chains whose supremum lies in the (m, n) window.
std::vector<DeclaredChain> declared_chains(FamilyId f, std::uint64_t m, std::uint64_t n);

/// Throws ForeignElement if either element is from another family.
bool family_order(FamilyId f, const FamilyElement& x, const FamilyElement& y);

enum class DistinguishedSet { a, down_a, a_prime, scott_closure_a };

const char* distinguished_set_name(DistinguishedSet s);
/// "A", "downA", "Aprime", "scott_closure_A"; throws UnknownSet.
DistinguishedSet parse_distinguished_set(const std::string& name);

/// ladder: A = all a(i,j). omega: A = all nat(k).
bool family_membership(FamilyId f, DistinguishedSet s, const FamilyElement& x);

/// Omega family only; throws BadParameters for the ladder, ForeignElement for
/// terms of another family.
bool family_way_below(FamilyId f, const FamilyElement& x, const FamilyElement& y);

inline constexpr std::size_t kMaxWindowElements = 256;

/// A finite piece of a family with the restricted order. Windows may exceed
/// the poset-core element cap; poset() is only available below it.
class Window {
 public:
  FamilyId family() const { return family_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<FamilyElement>& elements() const { return elements_; }
  const FamilyElement& element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(const FamilyElement& x) const;
  bool leq(std::size_t i, std::size_t j) const { return order_[i * elements_.size() + j] != 0; }

  /// Throws WindowTooLarge above kMaxElements.
  Poset poset() const;

 private:
  friend Window window(FamilyId f, std::uint64_t m, std::uint64_t n);

  FamilyId family_ = FamilyId::ladder;
  std::uint64_t m_ = 0;
  std::uint64_t n_ = 0;
  std::vector<FamilyElement> elements_;
  std::vector<std::uint8_t> order_;
};

/// ladder: a(i,j) for i <= m, j <= n, then b(0..m), then top.
/// omega: nat(0..n), then omega; m is ignored.
/// Throws WindowTooLarge above kMaxWindowElements.
Window window(FamilyId f, std::uint64_t m, std::uint64_t n);

/// Order axioms and embedding, declared-supremum clauses, the distinguished
/// sets against the membership predicates, and for omega the way-below,
/// continuity and Scott-interior clauses.
ClosureReport verify_window_soundness(FamilyId f, std::uint64_t m, std::uint64_t n);

}  // namespace orderlab
