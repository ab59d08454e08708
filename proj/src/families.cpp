#include "orderlab/families.hpp"

#include <algorithm>
#include <regex>

namespace orderlab {

namespace {

bool in_signature(FamilyId f, TermKind k) {
  if (f == FamilyId::ladder) return k == TermKind::a || k == TermKind::b || k == TermKind::top;
  return k == TermKind::nat || k == TermKind::omega;
}

void require_member(FamilyId f, const FamilyElement& x) {
  if (x.family != f || !in_signature(f, x.kind))
    throw ForeignElement("term " + x.to_string() + " is not an element of the " + family_name(f) + " family");
}

// Windows up to this size also run the literal finite operators (directed
// subsets, way-below); larger ones rely on finite directed sets having a maximum.
constexpr std::size_t kMaxLiteralWindow = 16;

std::uint64_t horizon(const Window& w) { return std::max(w.m(), w.n()) + 1; }

std::string term_list(const Window& w, const std::vector<bool>& in) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (in[i]) {
      if (!first) s += ",";
      s += w.element(i).to_string();
      first = false;
    }
  return s + "}";
}

}  // namespace

const char* family_name(FamilyId f) { return f == FamilyId::ladder ? "ladder" : "omega"; }

FamilyId parse_family(const std::string& name) {
  if (name == "ladder") return FamilyId::ladder;
  if (name == "omega") return FamilyId::omega;
  throw ParseError("unknown family '" + name + "'");
}

FamilyElement FamilyElement::parse(FamilyId family, const std::string& text) {
  static const std::regex two(R"(\s*a\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex one(R"(\s*(b|nat)\(\s*(\d+)\s*\)\s*)");
  static const std::regex bare(R"(\s*(top|omega)\s*)");
  std::smatch mt;
  FamilyElement e;
  try {
    if (std::regex_match(text, mt, two)) {
      e = {family, TermKind::a, std::stoull(mt[1]), std::stoull(mt[2])};
    } else if (std::regex_match(text, mt, one)) {
      e = {family, mt[1] == "b" ? TermKind::b : TermKind::nat, std::stoull(mt[2]), 0};
    } else if (std::regex_match(text, mt, bare)) {
      e = {family, mt[1] == "top" ? TermKind::top : TermKind::omega, 0, 0};
    } else {
      throw ParseError("malformed family term '" + text + "'");
    }
  } catch (const std::out_of_range&) {
    throw ParseError("index out of range in family term '" + text + "'");
  }
  require_member(family, e);
  return e;
}

std::string FamilyElement::to_string() const {
  switch (kind) {
    case TermKind::a: return "a(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case TermKind::b: return "b(" + std::to_string(i) + ")";
    case TermKind::top: return "top";
    case TermKind::nat: return "nat(" + std::to_string(i) + ")";
    case TermKind::omega: return "omega";
  }
  return "?";
}

std::vector<DeclaredChain> declared_chains(FamilyId f, std::uint64_t m, std::uint64_t /*n*/) {
  std::vector<DeclaredChain> out;
  if (f == FamilyId::ladder) {
    for (std::uint64_t i = 0; i <= m; ++i)
      out.push_back({"column " + std::to_string(i), [i](std::uint64_t k) { return FamilyElement::a(i, k); },
                     FamilyElement::b(i)});
    out.push_back({"b-chain", [](std::uint64_t k) { return FamilyElement::b(k); }, FamilyElement::top()});
  } else {
    out.push_back({"naturals", [](std::uint64_t k) { return FamilyElement::nat(k); }, FamilyElement::omega()});
  }
  return out;
}

bool family_order(FamilyId f, const FamilyElement& x, const FamilyElement& y) {
  require_member(f, x);
  require_member(f, y);
  if (f == FamilyId::omega) {
    if (y.kind == TermKind::omega) return true;
    return x.kind == TermKind::nat && x.i <= y.i;
  }
  if (y.kind == TermKind::top) return true;
  switch (x.kind) {
    case TermKind::a:
      if (y.kind == TermKind::a) return x.i == y.i && x.j <= y.j;
      return y.kind == TermKind::b && x.i <= y.i;
    case TermKind::b: return y.kind == TermKind::b && x.i <= y.i;
    default: return false;
  }
}

const char* distinguished_set_name(DistinguishedSet s) {
  switch (s) {
    case DistinguishedSet::a: return "A";
    case DistinguishedSet::down_a: return "downA";
    case DistinguishedSet::a_prime: return "Aprime";
    case DistinguishedSet::scott_closure_a: return "scott_closure_A";
  }
  return "?";
}

DistinguishedSet parse_distinguished_set(const std::string& name) {
  for (auto s : {DistinguishedSet::a, DistinguishedSet::down_a, DistinguishedSet::a_prime,
                 DistinguishedSet::scott_closure_a})
    if (name == distinguished_set_name(s)) return s;
  throw UnknownSet("unknown distinguished set '" + name + "' (expected A, downA, Aprime, scott_closure_A)");
}

bool family_membership(FamilyId f, DistinguishedSet s, const FamilyElement& x) {
  require_member(f, x);
  if (f == FamilyId::ladder) {
    switch (s) {
      case DistinguishedSet::a:
      case DistinguishedSet::down_a: return x.kind == TermKind::a;
      case DistinguishedSet::a_prime: return x.kind == TermKind::a || x.kind == TermKind::b;
      case DistinguishedSet::scott_closure_a: return true;
    }
  }
  switch (s) {
    case DistinguishedSet::a:
    case DistinguishedSet::down_a: return x.kind == TermKind::nat;
    case DistinguishedSet::a_prime:
    case DistinguishedSet::scott_closure_a: return true;
  }
  return false;
}

bool family_way_below(FamilyId f, const FamilyElement& x, const FamilyElement& y) {
  if (f != FamilyId::omega) throw BadParameters("way-below is only provided for the omega family");
  require_member(f, x);
  require_member(f, y);
  if (x.kind == TermKind::omega) return false;
  return y.kind == TermKind::omega || x.i <= y.i;
}

std::optional<std::size_t> Window::index_of(const FamilyElement& x) const {
  const auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Poset Window::poset() const {
  const std::size_t n = size();
  if (n > kMaxElements)
    throw WindowTooLarge("window has " + std::to_string(n) + " elements; posets hold at most " +
                         std::to_string(kMaxElements));
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j)) pairs.push_back({i, j});
  std::vector<std::string> labels;
  for (const auto& e : elements_) labels.push_back(e.to_string());
  return validate_poset(n, pairs, RelationMode::full_order).with_labels(std::move(labels));
}

Window window(FamilyId f, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t count = f == FamilyId::ladder ? (m + 1) * (n + 1) + (m + 1) + 1 : n + 2;
  if (m >= kMaxWindowElements || n >= kMaxWindowElements || count > kMaxWindowElements)
    throw WindowTooLarge("window (" + std::to_string(m) + "," + std::to_string(n) + ") exceeds " +
                         std::to_string(kMaxWindowElements) + " elements");
  Window w;
  w.family_ = f;
  w.m_ = f == FamilyId::ladder ? m : 0;
  w.n_ = n;
  if (f == FamilyId::ladder) {
    for (std::uint64_t i = 0; i <= m; ++i)
      for (std::uint64_t j = 0; j <= n; ++j) w.elements_.push_back(FamilyElement::a(i, j));
    for (std::uint64_t i = 0; i <= m; ++i) w.elements_.push_back(FamilyElement::b(i));
    w.elements_.push_back(FamilyElement::top());
  } else {
    for (std::uint64_t k = 0; k <= n; ++k) w.elements_.push_back(FamilyElement::nat(k));
    w.elements_.push_back(FamilyElement::omega());
  }
  const std::size_t size = w.elements_.size();
  w.order_.assign(size * size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) w.order_[i * size + j] = family_order(f, w.elements_[i], w.elements_[j]);
  return w;
}

ClosureReport verify_window_soundness(FamilyId f, std::uint64_t m, std::uint64_t n) {
  const Window w = window(f, m, n);
  const std::size_t size = w.size();
  const std::uint64_t h = horizon(w);
  const auto chains = declared_chains(f, w.m(), w.n());
  const std::string scope = std::string(family_name(f)) + " window (" + std::to_string(w.m()) + "," +
                            std::to_string(w.n()) + "), " + std::to_string(size) + " elements";
  ClosureReport rep;
  rep.subject = std::string("family ") + family_name(f);

  {
    std::vector<std::string> wit;
    for (std::size_t i = 0; i < size && wit.empty(); ++i) {
      if (!w.leq(i, i)) wit = {"not reflexive at " + w.element(i).to_string()};
      for (std::size_t j = 0; j < size && wit.empty(); ++j) {
        if (i != j && w.leq(i, j) && w.leq(j, i))
          wit = {"not antisymmetric at " + w.element(i).to_string() + ", " + w.element(j).to_string()};
        for (std::size_t k = 0; k < size && wit.empty(); ++k)
          if (w.leq(i, j) && w.leq(j, k) && !w.leq(i, k))
            wit = {"not transitive at " + w.element(i).to_string() + " <= " + w.element(j).to_string() +
                   " <= " + w.element(k).to_string()};
      }
    }
    rep.add("window.order-axioms", scope, wit.empty(), wit);
  }
  {
    std::vector<std::string> wit;
    auto sorted = w.elements();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) wit.push_back("labels not injective");
    for (std::size_t i = 0; i < size && wit.empty(); ++i)
      for (std::size_t j = 0; j < size && wit.empty(); ++j)
        if (w.leq(i, j) != family_order(f, w.element(i), w.element(j)))
          wit = {"order differs at " + w.element(i).to_string() + ", " + w.element(j).to_string()};
    if (wit.empty() && size <= kMaxElements) {
      try {
        const auto p = w.poset();
        for (std::size_t i = 0; i < size && wit.empty(); ++i)
          for (std::size_t j = 0; j < size && wit.empty(); ++j)
            if (p.leq(i, j) != w.leq(i, j)) wit = {"poset order differs from window order"};
      } catch (const Error& e) {
        wit = {std::string("poset validation failed: ") + e.what()};
      }
    }
    rep.add("window.embedding", scope + (size <= kMaxElements ? ", poset-validated" : ""), wit.empty(), wit);
  }

  const auto index = [&](const FamilyElement& x) { return w.index_of(x); };
  {
    std::vector<std::string> w_upper, w_least;
    for (const auto& c : chains) {
      const auto sup = index(c.sup);
      if (!sup) {
        w_upper = {c.name + ": supremum " + c.sup.to_string() + " outside the window"};
        break;
      }
      for (std::uint64_t k = 0; k <= h && w_upper.empty(); ++k)
        if (!family_order(f, c.member(k), c.sup))
          w_upper = {c.name + ": " + c.member(k).to_string() + " not below " + c.sup.to_string()};
      for (std::size_t u = 0; u < size && w_least.empty(); ++u) {
        bool bound = true;
        for (std::uint64_t k = 0; k <= h && bound; ++k) bound = family_order(f, c.member(k), w.element(u));
        if (bound && !w.leq(*sup, u))
          w_least = {c.name + ": upper bound " + w.element(u).to_string() + " not above " + c.sup.to_string()};
      }
    }
    rep.add("family.sup-upper-bound", scope + ", members up to index " + std::to_string(h), w_upper.empty(),
            w_upper);
    rep.add("family.sup-least", scope, w_least.empty(), w_least);
  }

  // Distinguished sets restricted to the window.
  std::vector<bool> in_a(size), down(size, false);
  for (std::size_t x = 0; x < size; ++x) in_a[x] = family_membership(f, DistinguishedSet::a, w.element(x));
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if (in_a[y] && w.leq(x, y)) down[x] = true;
  {
    std::vector<std::string> wit;
    for (std::size_t x = 0; x < size && wit.empty(); ++x)
      if (down[x] != in_a[x] || down[x] != family_membership(f, DistinguishedSet::down_a, w.element(x)))
        wit = {"x=" + w.element(x).to_string()};
    rep.add("family.down-a", scope, wit.empty(), wit);
  }

  // One completion step: finite directed suprema in the window plus declared
  // suprema of chains whose window members all lie in the set.
  const auto down_of = [&](const std::vector<bool>& s) {
    std::vector<bool> out(size, false);
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        if (s[y] && w.leq(x, y)) out[x] = true;
    return out;
  };
  const auto complete = [&](const std::vector<bool>& s) {
    auto out = down_of(s);
    if (size <= kMaxLiteralWindow) {
      const auto p = w.poset();
      Mask m = 0;
      for (std::size_t x = 0; x < size; ++x)
        if (out[x]) m |= bit(x);
      const auto finite = one_step(p, p.set(m));
      for (std::size_t x = 0; x < size; ++x) out[x] = out[x] || finite.contains(x);
    }
    const auto base = out;
    for (const auto& c : chains) {
      bool inside = true;
      for (std::uint64_t k = 0; k <= h && inside; ++k)
        if (auto i = index(c.member(k))) inside = base[*i];
      if (inside) out[*index(c.sup)] = true;
    }
    return out;
  };
  const auto prime = complete(in_a);
  {
    std::vector<std::string> wit;
    for (std::size_t x = 0; x < size && wit.empty(); ++x)
      if (prime[x] != family_membership(f, DistinguishedSet::a_prime, w.element(x)))
        wit = {"x=" + w.element(x).to_string(), "window A'=" + term_list(w, prime)};
    rep.add("family.one-step-membership", scope, wit.empty(), wit);
  }
  auto cl = prime;
  for (auto next = complete(cl); next != cl; next = complete(cl)) cl = next;
  {
    std::vector<std::string> wit;
    for (std::size_t x = 0; x < size && wit.empty(); ++x)
      if (cl[x] != family_membership(f, DistinguishedSet::scott_closure_a, w.element(x)))
        wit = {"x=" + w.element(x).to_string(), "window closure=" + term_list(w, cl)};
    rep.add("family.closure-membership", scope, wit.empty(), wit);
  }
  {
    std::vector<std::string> wit;
    if (f == FamilyId::ladder) {
      const auto top = *index(FamilyElement::top());
      if (!(cl[top] && !prime[top])) wit = {"top does not separate A' from the Scott closure"};
    } else if (prime != cl) {
      wit = {"A'=" + term_list(w, prime), "closure=" + term_list(w, cl)};
    }
    rep.add("family.one-step-vs-closure",
            f == FamilyId::ladder ? "top in closure, not in A'" : "A' equals the Scott closure", wit.empty(), wit)
        .label = "discriminating";
    rep.statements.push_back({"one-step-on-A", prime == cl});
  }

  if (f == FamilyId::ladder) {
    std::vector<std::string> wit;
    for (std::size_t x = 0; x < size && wit.empty(); ++x)
      for (std::size_t y = 0; y < size && wit.empty(); ++y) {
        const auto& ex = w.element(x);
        const auto& ey = w.element(y);
        if (!in_a[x] || !in_a[y] || ex.i == ey.i) continue;
        for (std::size_t z = 0; z < size; ++z)
          if (down[z] && w.leq(x, z) && w.leq(y, z)) {
            wit = {ex.to_string() + ", " + ey.to_string() + " bounded by " + w.element(z).to_string()};
            break;
          }
      }
    rep.add("ladder.cross-column-unbounded", scope, wit.empty(), wit);
    return rep;
  }

  // Omega: way-below, continuity and Scott interiors.
  std::vector<Mask> finite_wb;
  if (size <= kMaxLiteralWindow) finite_wb = way_below(w.poset()).below_rows();
  const auto window_wb = [&](std::size_t x, std::size_t y) {
    return finite_wb.empty() ? w.leq(x, y) : has(finite_wb[y], x);
  };
  {
    std::vector<std::string> wit;
    std::size_t by_chain = 0;
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y) {
        bool expected = window_wb(x, y);
        for (const auto& c : chains) {
          if (!family_order(f, w.element(y), c.sup)) continue;
          bool reached = false;
          for (std::uint64_t k = 0; k <= h && !reached; ++k) reached = family_order(f, w.element(x), c.member(k));
          expected = expected && reached;
        }
        if (expected != window_wb(x, y)) ++by_chain;
        if (wit.empty() && expected != family_way_below(f, w.element(x), w.element(y)))
          wit = {w.element(x).to_string() + " << " + w.element(y).to_string()};
      }
    rep.add("omega.way-below-agreement",
            scope + ", " + std::to_string(size * size) + " pairs, " + std::to_string(by_chain) +
                " decided by the infinite chain",
            wit.empty(), wit)
        .label = "discriminating";
  }
  {
    std::vector<std::string> wit;
    for (std::size_t x = 0; x < size && wit.empty(); ++x) {
      std::vector<bool> below(size);
      for (std::size_t y = 0; y < size; ++y) below[y] = family_way_below(f, w.element(y), w.element(x));
      bool ok = below[x];  // compact: x is its own largest approximant
      for (std::size_t y = 0; y < size && ok; ++y) ok = !below[y] || w.leq(y, x);
      for (const auto& c : chains) {
        if (ok || !(c.sup == w.element(x))) continue;
        std::vector<bool> members(size, false);
        for (std::uint64_t k = 0; k <= h; ++k)
          if (auto i = index(c.member(k))) members[*i] = true;
        ok = members == below;
      }
      if (!ok) wit = {"x=" + w.element(x).to_string()};
    }
    rep.add("omega.continuous", scope, wit.empty(), wit);
    rep.statements.push_back({"continuous", wit.empty()});
  }
  {
    std::vector<std::string> wit;
    for (std::size_t x = 0; x < size && wit.empty(); ++x) {
      const auto& ex = w.element(x);
      bool open = true;
      for (const auto& c : chains) {
        if (!family_order(f, ex, c.sup)) continue;
        bool enters = false;
        for (std::uint64_t k = 0; k <= h && !enters; ++k) enters = family_order(f, ex, c.member(k));
        open = open && enters;
      }
      std::vector<bool> up(size), interior(size, false), wayabove(size);
      for (std::size_t y = 0; y < size; ++y) {
        up[y] = w.leq(x, y);
        wayabove[y] = family_way_below(f, ex, w.element(y));
      }
      if (open) {
        interior = up;
      } else if (ex.kind != TermKind::omega) {
        wit = {"interior of up " + ex.to_string() + " undetermined"};
        break;
      }
      if (interior != wayabove)
        wit = {"x=" + ex.to_string(), "int(up x)=" + term_list(w, interior), "way-above=" + term_list(w, wayabove)};
    }
    rep.add("omega.upset-interior", scope + "; omega: up set {omega}, interior {}", wit.empty(), wit).label =
        "discriminating";
  }
  return rep;
}

}  // namespace orderlab
