#include "orderlab/element_set.hpp"

#include <charconv>

#include "orderlab/errors.hpp"

namespace orderlab {

ElementSet ElementSet::of(std::size_t universe, std::initializer_list<std::size_t> items) {
  Mask m = 0;
  for (auto i : items) {
    if (i >= universe) throw IndexOutOfRange("element " + std::to_string(i) + " outside universe");
    m |= bit(i);
  }
  return {m, universe};
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  for_each_bit(bits_, [&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string out;
  for_each_bit(bits_, [&](std::size_t i) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  });
  return out;
}

ElementSet ElementSet::parse(std::string_view text, std::size_t universe) {
  Mask m = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("bad element list: '" + std::string(text) + "'");
    if (value >= universe)
      throw IndexOutOfRange("element " + std::to_string(value) + " outside universe of size " +
                            std::to_string(universe));
    m |= bit(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("bad element list: '" + std::string(text) + "'");
      ++pos;
    }
  }
  return {m, universe};
}

std::string braced(const ElementSet& s) { return "{" + s.to_string() + "}"; }

}  // namespace orderlab
