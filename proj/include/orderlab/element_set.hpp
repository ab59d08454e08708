#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orderlab {

/// Bit mask over element indices; bit i set means element i is present.
using Mask = std::uint32_t;

/// Largest supported universe. Every subset fits a single Mask.
inline constexpr std::size_t kMaxElements = 24;

inline constexpr Mask full_mask(std::size_t n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

inline constexpr bool has(Mask m, std::size_t i) { return (m >> i) & 1u; }

inline constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Calls f(i) for every set bit, in ascending order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    f(i);
    m &= m - 1;
  }
}

/// A subset of a poset's universe {0, ..., n-1}.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr ElementSet(Mask bits, std::size_t universe)
      : bits_(bits & full_mask(universe)), universe_(static_cast<std::uint8_t>(universe)) {}

  static constexpr ElementSet empty(std::size_t universe) { return {0, universe}; }
  static constexpr ElementSet all(std::size_t universe) { return {full_mask(universe), universe}; }
  static ElementSet of(std::size_t universe, std::initializer_list<std::size_t> items);

  constexpr Mask bits() const { return bits_; }
  constexpr std::size_t universe() const { return universe_; }

  constexpr bool contains(std::size_t i) const { return has(bits_, i); }
  constexpr bool is_empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(const ElementSet& o) const { return orderlab::subset_of(bits_, o.bits_); }

  constexpr ElementSet complement() const { return {~bits_ & full_mask(universe_), universe_}; }

  std::vector<std::size_t> indices() const;

  /// Sorted, comma-separated index list; empty string for the empty set.
  std::string to_string() const;

  /// Parses "0,2,5" (whitespace tolerated, empty string = empty set).
  static ElementSet parse(std::string_view text, std::size_t universe);

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return {a.bits_ & b.bits_, a.universe_}; }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return {a.bits_ | b.bits_, a.universe_}; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return {a.bits_ & ~b.bits_, a.universe_}; }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

 private:
  Mask bits_ = 0;
  std::uint8_t universe_ = 0;
};

/// "{1,2}" style rendering used inside witness strings.
std::string braced(const ElementSet& s);

}  // namespace orderlab
