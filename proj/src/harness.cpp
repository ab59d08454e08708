#include "orderlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace orderlab {

namespace {

enum class SuiteKind { per_poset, per_relation, per_pair };

SuiteKind suite_kind(const std::string& s) {
  if (s == "continuity" || s == "one-step") return SuiteKind::per_poset;
  if (s == "algebra") return SuiteKind::per_pair;
  return SuiteKind::per_relation;
}

// splitmix64 finalizer, used to derive independent per-instance seeds.
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string hex_rows(const std::vector<Mask>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '.';
    out += hex(rows[i]);
  }
  return out;
}

std::vector<Mask> parse_hex_rows(const std::string& s, const std::string& fp) {
  std::vector<Mask> rows;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789abcdef") != std::string::npos)
      throw ParseError("malformed fingerprint '" + fp + "'");
    rows.push_back(static_cast<Mask>(std::stoull(part, nullptr, 16)));
  }
  return rows;
}

AuxRelation builtin_relation(const Poset& p, const std::string& name) {
  if (name == "leq") return order_relation(p);
  if (name == "way-below") return way_below(p);
  if (name == "bottom") return bottom_relation(p);
  throw BadParameters("unknown builtin relation '" + name + "' (expected leq, way-below, bottom)");
}

std::vector<AuxRelation> relations_for(const Scope& s, const Poset& p, std::size_t poset_index) {
  switch (s.relations) {
    case RelationSource::enumerate: return enumerate_aux(p);
    case RelationSource::sample: {
      std::vector<AuxRelation> out;
      for (std::size_t k = 0; k < s.relation_samples; ++k) out.push_back(sample_aux(p, mix(mix(s.seed, poset_index), k)));
      return out;
    }
    case RelationSource::builtins: {
      std::vector<AuxRelation> out;
      for (const auto& b : s.builtins) out.push_back(builtin_relation(p, b));
      return out;
    }
    case RelationSource::explicit_: {
      std::vector<AuxRelation> out;
      for (const auto& r : s.explicit_relations)
        if (r.poset() == p) out.push_back(r);
      return out;
    }
  }
  return {};
}

std::vector<ElementSet> subsets_for(const Scope& s, const Poset& p, std::uint64_t key) {
  if (s.subsets == SubsetSource::all) return SubsetScope::all(p).sets;
  std::mt19937_64 rng(mix(s.seed ^ 0x5eed5eedULL, key));
  std::vector<ElementSet> out;
  for (std::size_t k = 0; k < s.subset_samples; ++k) out.push_back(p.set(static_cast<Mask>(rng()) & full_mask(p.size())));
  return out;
}

// A checker result, tagged with the subset it was restricted to if any.
struct Piece {
  std::optional<ElementSet> subset;
  Report report;
};

// Runs one suite on one instance. Returns no pieces when the suite does not
// apply (for example chain on a non-approximating relation).
std::vector<Piece> execute(const std::string& suite, const Poset& p, const AuxRelation* r, const AuxRelation* r2,
                           const std::vector<ElementSet>& subsets) {
  std::vector<Piece> out;
  if (suite == "continuity") {
    out.push_back({std::nullopt, check_continuity_characterization(p)});
  } else if (suite == "one-step") {
    out.push_back({std::nullopt, check_one_step_theorems(p)});
  } else if (suite == "algebra") {
    out.push_back({std::nullopt, check_algebra(*r, *r2, SubsetScope{subsets, std::to_string(subsets.size()) + " subsets"})});
  } else if (suite == "int-char") {
    out.push_back({std::nullopt, check_int_equivalences(*r)});
  } else if (suite == "partition") {
    for (const auto& a : subsets) out.push_back({a, check_partition(*r, a)});
  } else if (suite == "laws") {
    out.push_back({std::nullopt, check_basic_laws(*r, SubsetScope{subsets, std::to_string(subsets.size()) + " subsets"})});
  } else if (suite == "adjoint") {
    out.push_back({std::nullopt, check_adjunctions(*r)});
  } else if (suite == "chain") {
    if (classify(*r).approximating)
      for (const auto& a : subsets) out.push_back({a, check_chain_of_containments(*r, a)});
  } else if (suite == "cspace") {
    if (classify(*r).pre_approximating) out.push_back({std::nullopt, check_cspace_theorems(*r)});
  } else if (suite == "mu-topology") {
    if (classify(*r).pre_approximating) {
      auto rep = check_mu_topology(*r);
      rep.merge(check_mu_inaccessibility(*r));
      out.push_back({std::nullopt, std::move(rep)});
    }
  } else {
    throw BadParameters("unknown suite '" + suite + "'");
  }
  return out;
}

struct Task {
  std::string suite;
  std::size_t poset;
  std::optional<std::size_t> rel;
  std::optional<std::size_t> rel2;
};

struct TaskResult {
  bool ran = false;
  bool passed = true;
  bool budget_hit = false;
  std::vector<Failure> failures;
  std::optional<Finding> finding;
};

TaskResult run_task(const Task& t, const Scope& scope, const std::vector<Poset>& posets,
                    const std::vector<std::vector<AuxRelation>>& rels) {
  TaskResult res;
  const Poset& p = posets[t.poset];
  const AuxRelation* r = t.rel ? &rels[t.poset][*t.rel] : nullptr;
  const AuxRelation* r2 = t.rel2 ? &rels[t.poset][*t.rel2] : nullptr;
  const std::uint64_t key = mix(mix(t.poset, t.rel.value_or(0)), t.rel2.value_or(0));
  try {
    const auto pieces = execute(t.suite, p, r, r2, subsets_for(scope, p, key));
    if (pieces.empty()) return res;
    res.ran = true;
    for (const auto& piece : pieces) {
      const std::string fp = fingerprint(p, r, r2, piece.subset);
      for (const auto& v : piece.report.verdicts) {
        if (!v.pass) {
          res.passed = false;
          res.failures.push_back({t.suite, v.law, fp, v.witnesses});
        }
        if (v.finding) {
          if (!res.finding) res.finding = Finding{t.suite, fp, {}, {}};
          res.finding->laws.push_back(v.law);
          for (const auto& w : v.witnesses) res.finding->witnesses.push_back(v.law + ": " + w);
        }
      }
    }
  } catch (const BudgetExceeded&) {
    res.ran = false;
    res.budget_hit = true;
  } catch (const Error& e) {
    res.ran = true;
    res.passed = false;
    res.failures.push_back({t.suite, "error", fingerprint(p, r, r2), {e.what()}});
  }
  return res;
}

struct Registry {
  std::mutex mu;
  std::vector<Property> props;
};

bool cspace_either(const AuxRelation& r) {
  const auto mu = mu_topology(r);
  return is_c_space(mu, UpsetMode::specialization).holds || is_c_space(mu, UpsetMode::underlying).holds;
}

Registry& registry() {
  static Registry* reg = [] {
    auto* g = new Registry;
    g->props.push_back({"cspace-implies-approximating", true, [](const Poset&, const AuxRelation* r) {
                          const auto c = classify(*r);
                          return c.pre_approximating && !c.approximating && cspace_either(*r);
                        }});
    g->props.push_back({"cdl-implies-approximating", true, [](const Poset&, const AuxRelation* r) {
                          const auto c = classify(*r);
                          if (!c.pre_approximating || !c.has_int || c.approximating) return false;
                          const auto mu = mu_topology(*r);
                          return mu.size() <= kMaxDistributivityOpens && opens_completely_distributive(mu);
                        }});
    g->props.push_back({"one-step-without-continuity", false, [](const Poset& p, const AuxRelation*) {
                          return has_one_step_closure(p).holds && !classify(way_below(p)).approximating;
                        }});
    g->props.push_back({"int-equivalence-break", true, [](const Poset&, const AuxRelation* r) {
                          return !check_int_equivalences(*r).passed();
                        }});
    return g;
  }();
  return *reg;
}

}  // namespace

Scope Scope::exhaustive(std::size_t max_n) {
  Scope s;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& p : enumerate_posets(n, false)) s.posets.push_back(std::move(p));
  s.poset_description = "labeled posets n<=" + std::to_string(max_n);
  return s;
}

Scope Scope::single(const Poset& p, std::vector<AuxRelation> relations) {
  Scope s;
  s.posets = {p};
  s.poset_description = "one poset (n=" + std::to_string(p.size()) + ")";
  s.relations = RelationSource::explicit_;
  s.explicit_relations = std::move(relations);
  return s;
}

std::string Scope::describe() const {
  std::string d = poset_description.empty() ? std::to_string(posets.size()) + " posets" : poset_description;
  switch (relations) {
    case RelationSource::enumerate: d += ", all auxiliary relations"; break;
    case RelationSource::sample: d += ", " + std::to_string(relation_samples) + " sampled relations each"; break;
    case RelationSource::builtins: {
      d += ", builtins:";
      for (std::size_t i = 0; i < builtins.size(); ++i) d += (i ? "," : "") + builtins[i];
      break;
    }
    case RelationSource::explicit_: d += ", " + std::to_string(explicit_relations.size()) + " given relations"; break;
  }
  d += subsets == SubsetSource::all ? ", all subsets" : ", " + std::to_string(subset_samples) + " sampled subsets";
  return d;
}

void validate_scope(const Scope& s) {
  if (s.instance_cap == 0) throw BadParameters("instance cap must be positive");
  if (s.wall_time_cap_s && *s.wall_time_cap_s <= 0) throw BadParameters("wall-time cap must be positive");
  if (s.relations == RelationSource::sample && s.relation_samples == 0)
    throw BadParameters("relation sampling needs a positive sample count");
  if (s.subsets == SubsetSource::sample && s.subset_samples == 0)
    throw BadParameters("subset sampling needs a positive sample count");
  if (s.relations == RelationSource::builtins) {
    if (s.builtins.empty()) throw BadParameters("builtin relation source needs at least one builtin");
    for (const auto& b : s.builtins)
      if (b != "leq" && b != "way-below" && b != "bottom") throw BadParameters("unknown builtin relation '" + b + "'");
  }
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> ids{"int-char", "partition", "algebra", "chain", "continuity",
                                            "cspace",   "mu-topology", "one-step", "laws",  "adjoint"};
  return ids;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& raw : ids) {
    const std::string id = raw == "sec5" ? "one-step" : raw;
    if (id == "all") {
      for (const auto& s : all_suites())
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
      continue;
    }
    if (std::find(all_suites().begin(), all_suites().end(), id) == all_suites().end())
      throw BadParameters("unknown suite '" + id + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

int RunReport::exit_code() const {
  if (!failures.empty() || !complete) return 1;
  if (!findings.empty()) return 3;
  return 0;
}

Json RunReport::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["suites"] = suites;
  j["scope"] = scope;
  j["seed"] = seed;
  j["instances"] = {{"attempted", attempted}, {"passed", passed}};
  j["failures"] = Json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"suite", f.suite}, {"law", f.law}, {"fingerprint", f.fingerprint}, {"witnesses", f.witnesses}});
  j["findings"] = Json::array();
  for (const auto& f : findings)
    j["findings"].push_back({{"suite", f.suite}, {"fingerprint", f.fingerprint}, {"laws", f.laws}, {"witnesses", f.witnesses}});
  j["complete"] = complete;
  const int code = exit_code();
  j["status"] = code == 0 ? "pass" : code == 3 ? "pass-with-findings" : "fail";
  if (elapsed_s) j["elapsed_s"] = *elapsed_s;
  return j;
}

RunReport run_suite(const Scope& scope, const std::vector<std::string>& suite_ids, const RunOptions& opts) {
  validate_scope(scope);
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.suites = resolve_suites(suite_ids);
  rep.scope = scope.describe();
  rep.seed = scope.seed;

  const bool needs_relations = std::any_of(rep.suites.begin(), rep.suites.end(),
                                           [](const std::string& s) { return suite_kind(s) != SuiteKind::per_poset; });
  std::vector<std::vector<AuxRelation>> rels(scope.posets.size());
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < scope.posets.size(); ++pi) {
    if (needs_relations) {
      try {
        rels[pi] = relations_for(scope, scope.posets[pi], pi);
      } catch (const BudgetExceeded&) {
        rep.complete = false;
      }
    }
    for (const auto& s : rep.suites) {
      switch (suite_kind(s)) {
        case SuiteKind::per_poset: tasks.push_back({s, pi, std::nullopt, std::nullopt}); break;
        case SuiteKind::per_relation:
          for (std::size_t ri = 0; ri < rels[pi].size(); ++ri) tasks.push_back({s, pi, ri, std::nullopt});
          break;
        case SuiteKind::per_pair:
          for (std::size_t a = 0; a < rels[pi].size(); ++a)
            for (std::size_t b = a; b < rels[pi].size(); ++b) tasks.push_back({s, pi, a, b});
          break;
      }
    }
  }
  if (tasks.size() > scope.instance_cap) {
    tasks.resize(scope.instance_cap);
    rep.complete = false;
  }

  std::vector<TaskResult> results(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};
  const auto worker = [&] {
    for (;;) {
      if (scope.wall_time_cap_s) {
        const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
        if (el.count() > *scope.wall_time_cap_s) out_of_time = true;
      }
      if (out_of_time) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = run_task(tasks[i], scope, scope.posets, rels);
      done[i] = 1;
    }
  };
  unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!done[i]) {
      rep.complete = false;
      continue;
    }
    auto& r = results[i];
    if (r.budget_hit) rep.complete = false;
    if (!r.ran) continue;
    ++rep.attempted;
    if (r.passed) ++rep.passed;
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
    if (r.finding) rep.findings.push_back(std::move(*r.finding));
  }
  if (opts.timing) rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string fingerprint(const Poset& p, const AuxRelation* r, const AuxRelation* r2, std::optional<ElementSet> a) {
  std::string fp = "p:" + std::to_string(p.size()) + ":" + hex_rows(p.up_rows());
  if (r) fp += "|r:" + hex_rows(r->below_rows());
  if (r2) fp += "|r2:" + hex_rows(r2->below_rows());
  if (a) fp += "|a:" + hex(a->bits());
  return fp;
}

DecodedInstance decode_fingerprint(const std::string& fp) {
  std::vector<std::string> parts;
  std::stringstream ss(fp);
  std::string part;
  while (std::getline(ss, part, '|')) parts.push_back(part);
  if (parts.empty() || parts[0].rfind("p:", 0) != 0) throw ParseError("malformed fingerprint '" + fp + "'");

  const auto colon = parts[0].find(':', 2);
  if (colon == std::string::npos) throw ParseError("malformed fingerprint '" + fp + "'");
  std::size_t n = 0;
  try {
    n = std::stoul(parts[0].substr(2, colon - 2));
  } catch (const std::exception&) {
    throw ParseError("malformed fingerprint '" + fp + "'");
  }
  const auto rows = parse_hex_rows(parts[0].substr(colon + 1), fp);
  if (n == 0 || n > kMaxElements || rows.size() != n) throw ParseError("fingerprint poset size mismatch in '" + fp + "'");
  for (auto row : rows)
    if (!subset_of(row, full_mask(n))) throw ParseError("fingerprint row out of range in '" + fp + "'");
  if (auto v = first_order_violation(rows)) throw *v;
  DecodedInstance inst{Poset::from_valid_rows(rows), std::nullopt, std::nullopt, std::nullopt};

  const auto relation = [&](const std::string& body) {
    const auto below = parse_hex_rows(body, fp);
    if (below.size() != n) throw ParseError("fingerprint relation size mismatch in '" + fp + "'");
    for (auto row : below)
      if (!subset_of(row, full_mask(n))) throw ParseError("fingerprint row out of range in '" + fp + "'");
    if (auto v = first_aux_violation(inst.poset, below)) throw *v;
    return AuxRelation::from_valid_rows(inst.poset, below);
  };
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const auto& s = parts[k];
    if (s.rfind("r:", 0) == 0) {
      inst.relation = relation(s.substr(2));
    } else if (s.rfind("r2:", 0) == 0) {
      inst.second = relation(s.substr(3));
    } else if (s.rfind("a:", 0) == 0) {
      const auto bits = parse_hex_rows(s.substr(2), fp);
      if (bits.size() != 1 || !subset_of(bits[0], full_mask(n))) throw ParseError("malformed subset in '" + fp + "'");
      inst.subset = inst.poset.set(bits[0]);
    } else {
      throw ParseError("malformed fingerprint '" + fp + "'");
    }
  }
  return inst;
}

Report replay(const std::string& suite, const std::string& fp) {
  resolve_suites({suite});
  const auto inst = decode_fingerprint(fp);
  const auto kind = suite_kind(suite);
  if (kind != SuiteKind::per_poset && !inst.relation)
    throw BadParameters("suite '" + suite + "' needs a relation in the fingerprint");
  if (kind == SuiteKind::per_pair && !inst.second)
    throw BadParameters("suite '" + suite + "' needs a second relation in the fingerprint");
  const auto subsets = inst.subset ? std::vector<ElementSet>{*inst.subset} : SubsetScope::all(inst.poset).sets;
  Report out;
  out.subject = suite + " @ " + fp;
  for (auto& piece : execute(suite, inst.poset, inst.relation ? &*inst.relation : nullptr,
                             inst.second ? &*inst.second : nullptr, subsets))
    out.merge(piece.report);
  return out;
}

void register_property(Property p) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  for (auto& existing : reg.props)
    if (existing.name == p.name) {
      existing = std::move(p);
      return;
    }
  reg.props.push_back(std::move(p));
}

std::vector<std::string> property_names() {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  std::vector<std::string> out;
  for (const auto& p : reg.props) out.push_back(p.name);
  return out;
}

std::optional<Witness> search_counterexample(const std::string& property, const Scope& scope) {
  validate_scope(scope);
  Property prop;
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    const auto it = std::find_if(reg.props.begin(), reg.props.end(),
                                 [&](const Property& p) { return p.name == property; });
    if (it == reg.props.end()) throw BadParameters("unknown property '" + property + "'");
    prop = *it;
  }
  std::size_t instances = 0;
  const auto tick = [&] {
    if (++instances > scope.instance_cap)
      throw BudgetExceeded("search exceeded " + std::to_string(scope.instance_cap) + " instances");
  };
  for (std::size_t pi = 0; pi < scope.posets.size(); ++pi) {
    const Poset& p = scope.posets[pi];
    if (!prop.per_relation) {
      tick();
      if (prop.is_counterexample(p, nullptr))
        return Witness{property, fingerprint(p), Json{{"poset", poset_to_json(p)}}};
      continue;
    }
    for (const auto& r : relations_for(scope, p, pi)) {
      tick();
      if (prop.is_counterexample(p, &r))
        return Witness{property, fingerprint(p, &r),
                       Json{{"poset", poset_to_json(p)}, {"relation", relation_to_json(r)}}};
    }
  }
  return std::nullopt;
}

}  // namespace orderlab
