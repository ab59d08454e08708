#include "orderlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace orderlab {

namespace {

std::vector<Mask> transpose(const std::vector<Mask>& rows) {
  std::vector<Mask> out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for_each_bit(rows[i], [&](std::size_t j) { out[j] |= bit(i); });
  return out;
}

void check_universe(std::size_t n) {
  if (n == 0 || n > kMaxElements)
    throw BadParameters("poset size " + std::to_string(n) + " outside 1.." +
                        std::to_string(kMaxElements));
}

// Warshall on bit rows.
void transitive_closure(std::vector<Mask>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (has(rows[i], k)) rows[i] |= rows[k];
}

}  // namespace

// --- Poset -------------------------------------------------------------------

Poset Poset::from_valid_rows(std::vector<Mask> up_rows) {
  Poset p;
  p.up_ = std::move(up_rows);
  p.down_ = transpose(p.up_);
  const Mask all = full_mask(p.up_.size());
  for (std::size_t i = 0; i < p.up_.size(); ++i)
    if (p.up_[i] == all) p.bottom_ = i;
  return p;
}

std::string Poset::label(std::size_t i) const {
  if (i < labels_.size() && !labels_[i].empty()) return labels_[i];
  return std::to_string(i);
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != size())
    throw BadParameters("label count " + std::to_string(labels.size()) + " does not match size " +
                        std::to_string(size()));
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

std::vector<Pair> Poset::order_pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for_each_bit(up_[i], [&](std::size_t j) { out.emplace_back(i, j); });
  return out;
}

std::optional<AxiomViolation> first_order_violation(const std::vector<Mask>& up) {
  const std::size_t n = up.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!has(up[i], i)) return AxiomViolation(Axiom::reflexivity, i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (has(up[i], j) && has(up[j], i)) return AxiomViolation(Axiom::antisymmetry, i, j);
  for (std::size_t i = 0; i < n; ++i) {
    Mask reach = 0;
    for_each_bit(up[i], [&](std::size_t j) { reach |= up[j]; });
    const Mask missing = reach & ~up[i];
    if (missing != 0)
      return AxiomViolation(Axiom::transitivity, i,
                            static_cast<std::size_t>(std::countr_zero(missing)));
  }
  return std::nullopt;
}

Poset validate_poset(std::size_t n, const std::vector<Pair>& pairs, RelationMode mode) {
  check_universe(n);
  std::vector<Mask> rows(n, 0);
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n)
      throw IndexOutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside universe of size " + std::to_string(n));
    rows[i] |= bit(j);
  }
  if (mode == RelationMode::covers) {
    for (std::size_t i = 0; i < n; ++i) rows[i] |= bit(i);
    transitive_closure(rows);
  }
  if (auto v = first_order_violation(rows)) throw *v;
  return Poset::from_valid_rows(std::move(rows));
}

// --- closures and predicates -----------------------------------------------

ElementSet up_closure(const Poset& p, ElementSet s) {
  Mask out = 0;
  for_each_bit(s.bits(), [&](std::size_t i) { out |= p.up_row(i); });
  return p.set(out);
}

ElementSet down_closure(const Poset& p, ElementSet s) {
  Mask out = 0;
  for_each_bit(s.bits(), [&](std::size_t i) { out |= p.down_row(i); });
  return p.set(out);
}

bool is_upper(const Poset& p, ElementSet s) { return up_closure(p, s) == s; }
bool is_lower(const Poset& p, ElementSet s) { return down_closure(p, s) == s; }

bool is_directed(const Poset& p, ElementSet s) {
  const Mask m = s.bits();
  if (m == 0) return false;
  bool ok = true;
  for_each_bit(m, [&](std::size_t a) {
    for_each_bit(m, [&](std::size_t b) {
      if (ok && b > a && (p.up_row(a) & p.up_row(b) & m) == 0) ok = false;
    });
  });
  return ok;
}

bool is_filtered(const Poset& p, ElementSet s) {
  const Mask m = s.bits();
  if (m == 0) return false;
  bool ok = true;
  for_each_bit(m, [&](std::size_t a) {
    for_each_bit(m, [&](std::size_t b) {
      if (ok && b > a && (p.down_row(a) & p.down_row(b) & m) == 0) ok = false;
    });
  });
  return ok;
}

std::optional<std::size_t> supremum(const Poset& p, ElementSet s) {
  if (s.is_empty()) return std::nullopt;
  Mask bounds = full_mask(p.size());
  for_each_bit(s.bits(), [&](std::size_t i) { bounds &= p.up_row(i); });
  std::optional<std::size_t> least;
  for_each_bit(bounds, [&](std::size_t u) {
    if (!least && subset_of(bounds, p.up_row(u))) least = u;
  });
  return least;
}

std::optional<std::size_t> infimum(const Poset& p, ElementSet s) {
  if (s.is_empty()) return std::nullopt;
  Mask bounds = full_mask(p.size());
  for_each_bit(s.bits(), [&](std::size_t i) { bounds &= p.down_row(i); });
  std::optional<std::size_t> greatest;
  for_each_bit(bounds, [&](std::size_t u) {
    if (!greatest && subset_of(bounds, p.down_row(u))) greatest = u;
  });
  return greatest;
}

// --- enumeration -------------------------------------------------------------

namespace {

template <typename Pred>
std::vector<ElementSet> filter_all_subsets(const Poset& p, std::size_t cap, Pred keep) {
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << p.size();
  for (std::uint64_t m = 0; m < limit; ++m) {
    const ElementSet s = p.set(static_cast<Mask>(m));
    if (!keep(s)) continue;
    if (out.size() == cap) throw BudgetExceeded("set enumeration exceeded cap " + std::to_string(cap));
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<ElementSet> enumerate_upper_sets(const Poset& p, std::size_t cap) {
  return filter_all_subsets(p, cap, [&](ElementSet s) { return is_upper(p, s); });
}

std::vector<ElementSet> enumerate_lower_sets(const Poset& p, std::size_t cap) {
  return filter_all_subsets(p, cap, [&](ElementSet s) { return is_lower(p, s); });
}

std::vector<ElementSet> enumerate_directed_subsets(const Poset& p, std::size_t cap) {
  return enumerate_directed_subsets(p, p.all(), cap);
}

std::vector<ElementSet> enumerate_directed_subsets(const Poset& p, ElementSet within, std::size_t cap) {
  const Mask w = within.bits();
  if (static_cast<std::size_t>(std::popcount(w)) > kMaxDirectedUniverse)
    throw BudgetExceeded("directed-subset enumeration limited to " +
                         std::to_string(kMaxDirectedUniverse) + " elements");
  std::vector<ElementSet> out;
  // Submasks of w in ascending order.
  for (Mask s = (0 - w) & w; s != 0; s = (s - w) & w) {
    const ElementSet d = p.set(s);
    if (!is_directed(p, d)) continue;
    if (out.size() == cap) throw BudgetExceeded("directed-subset enumeration exceeded cap " + std::to_string(cap));
    out.push_back(d);
  }
  return out;
}

std::vector<DirectedSup> directed_with_suprema(const Poset& p, std::size_t cap) {
  std::vector<DirectedSup> out;
  for (const auto& d : enumerate_directed_subsets(p, cap))
    if (auto s = supremum(p, d)) out.push_back({d, *s});
  return out;
}

// --- generators ------------------------------------------------------------

Poset generate(const PosetKind& kind) {
  using Tag = PosetKind::Tag;
  switch (kind.tag) {
    case Tag::chain: {
      check_universe(kind.n);
      std::vector<Mask> rows(kind.n);
      for (std::size_t i = 0; i < kind.n; ++i) rows[i] = full_mask(kind.n) & ~full_mask(i);
      return Poset::from_valid_rows(std::move(rows));
    }
    case Tag::antichain: {
      check_universe(kind.n);
      std::vector<Mask> rows(kind.n);
      for (std::size_t i = 0; i < kind.n; ++i) rows[i] = bit(i);
      return Poset::from_valid_rows(std::move(rows));
    }
    case Tag::diamond:
      return validate_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, RelationMode::covers);
    case Tag::boolean: {
      if (kind.k > kMaxBooleanRank)
        throw BadParameters("boolean rank " + std::to_string(kind.k) + " exceeds " +
                            std::to_string(kMaxBooleanRank));
      const std::size_t n = std::size_t{1} << kind.k;
      std::vector<Mask> rows(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if ((i & ~j) == 0) rows[i] |= bit(j);
      return Poset::from_valid_rows(std::move(rows));
    }
    case Tag::random: {
      check_universe(kind.n);
      if (!(kind.edge_prob >= 0.0 && kind.edge_prob <= 1.0))
        throw BadParameters("edge probability must lie in [0,1]");
      std::mt19937_64 rng(kind.seed);
      std::vector<Mask> rows(kind.n);
      for (std::size_t i = 0; i < kind.n; ++i) rows[i] = bit(i);
      // Edges only go from lower to higher index, so the closure is acyclic.
      for (std::size_t i = 0; i < kind.n; ++i)
        for (std::size_t j = i + 1; j < kind.n; ++j)
          if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < kind.edge_prob) rows[i] |= bit(j);
      transitive_closure(rows);
      return Poset::from_valid_rows(std::move(rows));
    }
    case Tag::explicit_:
      break;
  }
  throw BadParameters("explicit posets are loaded from files, not generated");
}

// --- poset enumeration -------------------------------------------------------

namespace {

// All one-element extensions of q: the new element sits above the lower set
// `below` and beneath the upper set `above`.
template <typename Emit>
void extend(const std::vector<Mask>& q, bool natural, Emit&& emit) {
  const std::size_t m = q.size();
  const std::size_t x = m;
  const std::uint64_t limit = std::uint64_t{1} << m;
  auto is_lower_in_q = [&](Mask s) {
    bool ok = true;
    for_each_bit(s, [&](std::size_t i) {
      for (std::size_t j = 0; j < m && ok; ++j)
        if (has(q[j], i) && !has(s, j)) ok = false;
    });
    return ok;
  };
  auto is_upper_in_q = [&](Mask s) {
    bool ok = true;
    for_each_bit(s, [&](std::size_t i) { ok = ok && subset_of(q[i], s); });
    return ok;
  };
  for (std::uint64_t below = 0; below < limit; ++below) {
    const Mask d = static_cast<Mask>(below);
    if (!is_lower_in_q(d)) continue;
    Mask common_up = full_mask(m);
    for_each_bit(d, [&](std::size_t i) { common_up &= q[i]; });
    const std::uint64_t above_limit = natural ? 1 : limit;
    for (std::uint64_t above = 0; above < above_limit; ++above) {
      const Mask u = static_cast<Mask>(above);
      if ((u & d) != 0 || !subset_of(u, common_up) || !is_upper_in_q(u)) continue;
      std::vector<Mask> rows(q);
      rows.push_back(u | bit(x));
      for_each_bit(d, [&](std::size_t i) { rows[i] |= bit(x); });
      emit(std::move(rows));
    }
  }
}

std::vector<std::vector<Mask>> enumerate_rows(std::size_t n, bool natural) {
  std::vector<std::vector<Mask>> level{{bit(0)}};
  for (std::size_t size = 1; size < n; ++size) {
    std::vector<std::vector<Mask>> next;
    for (const auto& q : level)
      extend(q, natural, [&](std::vector<Mask> rows) { next.push_back(std::move(rows)); });
    level = std::move(next);
  }
  return level;
}

std::vector<Mask> relabel(const std::vector<Mask>& rows, const std::vector<std::size_t>& perm) {
  std::vector<Mask> out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Mask r = 0;
    for_each_bit(rows[i], [&](std::size_t j) { r |= bit(perm[j]); });
    out[perm[i]] = r;
  }
  return out;
}

}  // namespace

std::vector<Mask> canonical_form(const Poset& p) {
  if (p.size() > kMaxIsoEnumeration + 2)
    throw BudgetExceeded("canonical form limited to " + std::to_string(kMaxIsoEnumeration + 2) +
                         " elements");
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = p.up_rows();
  do {
    auto candidate = relabel(p.up_rows(), perm);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Poset> enumerate_posets(std::size_t n, bool up_to_iso, std::size_t cap) {
  const std::size_t limit = up_to_iso ? kMaxIsoEnumeration : kMaxLabeledEnumeration;
  if (n == 0 || n > limit)
    throw BadParameters("poset enumeration supports 1.." + std::to_string(limit) +
                        (up_to_iso ? " (up to isomorphism)" : " (labeled)"));
  std::vector<Poset> out;
  auto push = [&](std::vector<Mask> rows) {
    if (out.size() == cap) throw BudgetExceeded("poset enumeration exceeded cap " + std::to_string(cap));
    out.push_back(Poset::from_valid_rows(std::move(rows)));
  };
  if (!up_to_iso) {
    for (auto& rows : enumerate_rows(n, false)) push(std::move(rows));
    return out;
  }
  // Every isomorphism class has a naturally labeled member, so extending only
  // by maximal elements still reaches all classes.
  std::set<std::vector<Mask>> classes;
  for (const auto& rows : enumerate_rows(n, true))
    classes.insert(canonical_form(Poset::from_valid_rows(rows)));
  for (const auto& rows : classes) push(rows);
  return out;
}

// --- rendering ---------------------------------------------------------------

std::vector<Pair> hasse(const Poset& p) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for_each_bit(p.up_row(i), [&](std::size_t j) {
      if (i == j) return;
      if ((p.up_row(i) & p.down_row(j)) == (bit(i) | bit(j))) out.emplace_back(i, j);
    });
  return out;
}

std::string export_dot(const Poset& p, const DotOptions& opts) {
  std::ostringstream os;
  os << "digraph " << opts.name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string label;
    for (char c : p.label(i)) {
      if (c == '"' || c == '\\') label += '\\';
      label += c;
    }
    os << "  n" << i << " [label=\"" << label << "\"";
    if (opts.shade && opts.shade->contains(i)) os << ", style=filled, fillcolor=lightgray";
    os << "];\n";
  }
  for (auto [i, j] : hasse(p)) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace orderlab
