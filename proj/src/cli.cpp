#include "orderlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orderlab/harness.hpp"

namespace orderlab {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poset poset_flag(const std::string& path) {
  try {
    return load_poset(path);
  } catch (const Error& e) {
    throw UsageError(std::string("--poset: ") + e.what());
  }
}

AuxRelation relation_flag(const Poset& p, const std::string& spec, const std::string& flag = "--rel") {
  try {
    if (spec.rfind("builtin:", 0) == 0) {
      const auto name = spec.substr(8);
      if (name == "leq") return order_relation(p);
      if (name == "way-below") return way_below(p);
      if (name == "bottom") return bottom_relation(p);
      throw UsageError(flag + ": unknown builtin '" + name + "' (expected leq, way-below, bottom)");
    }
    const auto path = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
    return load_relation(p, path);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

ElementSet set_flag(const Poset& p, const std::string& text, const std::string& flag = "--set") {
  try {
    return ElementSet::parse(text, p.size());
  } catch (const Error& e) {
    throw UsageError(flag + " '" + text + "': " + e.what());
  }
}

FamilyElement term_arg(FamilyId f, const std::string& text) {
  try {
    return FamilyElement::parse(f, text);
  } catch (const Error& e) {
    throw UsageError("term '" + text + "': " + e.what());
  }
}

Json classify_json(const AuxClass& c) {
  Json j;
  j["pre_approximating"] = c.pre_approximating;
  j["approximating"] = c.approximating;
  j["int"] = c.has_int;
  Json w = Json::object();
  if (c.pre_witness) w["pre_approximating"] = *c.pre_witness;
  if (c.approx_witness) w["approximating"] = *c.approx_witness;
  if (c.int_witness) w["int"] = {c.int_witness->first, c.int_witness->second};
  j["witnesses"] = w;
  return j;
}

int report_exit(const Report& r) {
  if (!r.passed()) return 1;
  return r.has_findings() ? 3 : 0;
}

// Covers of a window's order, computed on its matrix so windows beyond the
// poset cap still render.
std::vector<Pair> window_covers(const Window& w) {
  std::vector<Pair> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !w.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && w.leq(i, k) && w.leq(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

Json window_json(const Window& w) {
  Json j;
  j["n"] = w.size();
  Json labels = Json::array();
  for (const auto& e : w.elements()) labels.push_back(e.to_string());
  j["labels"] = labels;
  Json pairs = Json::array();
  for (const auto& [a, b] : window_covers(w)) pairs.push_back({a, b});
  j["relation"] = {{"mode", "covers"}, {"pairs", pairs}};
  return j;
}

std::string window_dot(const Window& w) {
  std::ostringstream out;
  out << "digraph window {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < w.size(); ++i) out << "  n" << i << " [label=\"" << w.element(i).to_string() << "\"];\n";
  for (const auto& [a, b] : window_covers(w)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

// Flags shared by the campaign commands.
struct ScopeFlags {
  std::size_t max_n = 3;
  bool iso = false;
  std::size_t random_posets = 0;
  std::size_t random_n = 6;
  double edge_prob = 0.4;
  std::string relations = "enumerate";
  std::size_t relation_samples = 0;
  std::vector<std::string> builtins;
  std::size_t subset_samples = 0;
  std::uint64_t seed = 0;
  std::size_t instance_cap = std::size_t{1} << 20;
  double time_cap = 0;

  void attach(CLI::App* app) {
    app->add_option("--max-n", max_n, "Enumerate posets with 1..N elements")->capture_default_str();
    app->add_flag("--iso", iso, "One poset per isomorphism class");
    app->add_option("--random-posets", random_posets, "Use K random posets instead of enumeration");
    app->add_option("--random-n", random_n, "Size of random posets")->capture_default_str();
    app->add_option("--edge-prob", edge_prob, "Edge probability of random posets")->capture_default_str();
    app->add_option("--relations", relations, "enumerate, sample or builtins")
        ->check(CLI::IsMember({"enumerate", "sample", "builtins"}))
        ->capture_default_str();
    app->add_option("--relation-samples", relation_samples, "Sampled relations per poset");
    app->add_option("--builtin", builtins, "leq, way-below or bottom (repeatable)");
    app->add_option("--subset-samples", subset_samples, "Sample K subsets instead of all");
    app->add_option("--seed", seed, "Sampling seed")->envname("ORDERLAB_SEED");
    app->add_option("--instance-cap", instance_cap, "Stop after this many instances")->capture_default_str();
    app->add_option("--time-cap", time_cap, "Wall-time cap in seconds, checked between instances");
  }

  Scope build() const {
    Scope s;
    if (random_posets > 0) {
      for (std::size_t k = 0; k < random_posets; ++k)
        s.posets.push_back(generate(PosetKind::random(seed + k, random_n, edge_prob)));
      s.poset_description = std::to_string(random_posets) + " random posets (n=" + std::to_string(random_n) + ")";
    } else {
      if (max_n > (iso ? kMaxIsoEnumeration : kMaxLabeledEnumeration))
        throw UsageError("--max-n " + std::to_string(max_n) + " exceeds the enumeration limit");
      for (std::size_t n = 1; n <= max_n; ++n)
        for (auto& p : enumerate_posets(n, iso)) s.posets.push_back(std::move(p));
      s.poset_description = std::string(iso ? "iso-class" : "labeled") + " posets n<=" + std::to_string(max_n);
    }
    if (relations == "sample") {
      s.relations = RelationSource::sample;
      s.relation_samples = relation_samples;
    } else if (relations == "builtins") {
      s.relations = RelationSource::builtins;
      s.builtins = builtins.empty() ? std::vector<std::string>{"leq", "way-below", "bottom"} : builtins;
    }
    if (subset_samples > 0) {
      s.subsets = SubsetSource::sample;
      s.subset_samples = subset_samples;
    }
    s.seed = seed;
    s.instance_cap = instance_cap;
    if (time_cap > 0) s.wall_time_cap_s = time_cap;
    try {
      validate_scope(s);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return s;
  }
};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Approximation operators, topologies and closure theory on finite posets", "orderlab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--out", out_path_, "Write output to this file instead of stdout");
    app.set_version_flag("--version", kVersion);
    build_poset(app);
    build_aux(app);
    build_approx(app);
    build_topology(app);
    build_closure(app);
    build_family(app);
    build_campaigns(app);

    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--out") {
        ++i;
        continue;
      }
      if (args[i].rfind("-", 0) == 0) continue;
      if (app.get_subcommand_no_throw(args[i]) == nullptr) {
        err_ << "orderlab: unknown subcommand '" << args[i] << "'\n";
        return 2;
      }
      break;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::Success& e) {
      return app.exit(e, out_, err_);
    } catch (const CLI::ParseError& e) {
      err_ << "orderlab: " << e.what() << "\n";
      return 2;
    } catch (const UsageError& e) {
      err_ << "orderlab: " << e.what() << "\n";
      return 2;
    } catch (const BudgetExceeded& e) {
      err_ << "orderlab: " << e.what() << "\n";
      return 1;
    } catch (const Error& e) {
      err_ << "orderlab: " << e.what() << "\n";
      return 2;
    }

    if (!out_path_.empty()) {
      std::ofstream f(out_path_);
      if (!f) {
        err_ << "orderlab: --out: cannot write " << out_path_ << "\n";
        return 2;
      }
      f << buf_.str();
    } else {
      out_ << buf_.str();
    }
    return code_;
  }

 private:
  void emit(const Json& j) { buf_ << j.dump(2) << "\n"; }
  void emit(const std::string& s) { buf_ << s << "\n"; }
  void emit(const char* s) { buf_ << s << "\n"; }
  void emit_set(ElementSet s) {
    if (json_) {
      emit(set_to_json(s));
    } else {
      emit(s.to_string());
    }
  }

  CLI::App* with_poset(CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--poset", poset_path_, "Poset JSON file");
    if (required) o->required();
    return sub;
  }

  Poset poset() const { return poset_flag(poset_path_); }

  void build_poset(CLI::App& app) {
    auto* cmd = app.add_subcommand("poset", "Posets: validation, generation, enumeration, Hasse diagrams");
    cmd->require_subcommand(1);

    with_poset(cmd->add_subcommand("validate", "Validate a poset file and print it normalized"))
        ->callback([this] { emit(poset_to_json(poset())); });

    auto* gen = cmd->add_subcommand("gen", "Generate a poset");
    gen->add_option("--kind", kind_, "chain, antichain, diamond, boolean or random")
        ->required()
        ->check(CLI::IsMember({"chain", "antichain", "diamond", "boolean", "random"}));
    gen->add_option("--n", n_, "Number of elements");
    gen->add_option("--k", k_, "Rank of the boolean lattice");
    gen->add_option("--seed", seed_, "Seed for random posets")->envname("ORDERLAB_SEED");
    gen->add_option("--p", prob_, "Edge probability for random posets");
    gen->callback([this] {
      PosetKind kind;
      if (kind_ == "chain") kind = PosetKind::chain(n_);
      if (kind_ == "antichain") kind = PosetKind::antichain(n_);
      if (kind_ == "diamond") kind = PosetKind::diamond();
      if (kind_ == "boolean") kind = PosetKind::boolean(k_);
      if (kind_ == "random") kind = PosetKind::random(seed_, n_, prob_);
      try {
        emit(poset_to_json(generate(kind)));
      } catch (const Error& e) {
        throw UsageError(std::string("poset gen: ") + e.what());
      }
    });

    auto* en = cmd->add_subcommand("enumerate", "All posets on n elements");
    en->add_option("--n", n_, "Number of elements")->required();
    en->add_flag("--iso", iso_, "One representative per isomorphism class");
    en->add_flag("--count", count_, "Print only the number of posets");
    en->callback([this] {
      const auto all = enumerate_posets(n_, iso_);
      if (count_) {
        emit(std::to_string(all.size()));
        return;
      }
      Json arr = Json::array();
      for (const auto& p : all) arr.push_back(poset_to_json(p));
      emit(arr);
    });

    auto* h = with_poset(cmd->add_subcommand("hasse", "Cover pairs, or a DOT diagram with --dot"));
    h->add_flag("--dot", dot_, "Emit DOT");
    h->add_option("--shade", set_text_, "Shade this set in the DOT output");
    h->callback([this] {
      const auto p = poset();
      if (dot_) {
        DotOptions opts;
        if (!set_text_.empty()) opts.shade = set_flag(p, set_text_, "--shade");
        buf_ << export_dot(p, opts);
        return;
      }
      Json arr = Json::array();
      for (const auto& [a, b] : hasse(p)) arr.push_back({a, b});
      emit(arr);
    });
  }

  void build_aux(CLI::App& app) {
    auto* cmd = app.add_subcommand("aux", "Auxiliary relations");
    cmd->require_subcommand(1);

    auto* v = with_poset(cmd->add_subcommand("validate", "Validate a relation and print it normalized"));
    v->add_option("--rel", rel_spec_, "Relation: file path, file:path or builtin:leq|way-below|bottom")->required();
    v->callback([this] { emit(relation_to_json(relation_flag(poset(), rel_spec_))); });

    auto* c = with_poset(cmd->add_subcommand("close", "Least auxiliary relation containing the given pairs"));
    c->add_option("--pairs", pairs_text_, "Seed pairs as i:j,i:j,...");
    c->callback([this] {
      const auto p = poset();
      std::vector<Pair> seed;
      std::stringstream ss(pairs_text_);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        try {
          if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
          const auto i = std::stoul(item.substr(0, colon));
          const auto j = std::stoul(item.substr(colon + 1));
          seed.emplace_back(i, j);
        } catch (const std::exception&) {
          throw UsageError("--pairs: malformed pair '" + item + "' (expected i:j)");
        }
      }
      try {
        emit(relation_to_json(aux_closure(p, seed)));
      } catch (const Error& e) {
        throw UsageError(std::string("--pairs: ") + e.what());
      }
    });

    auto* cl = with_poset(cmd->add_subcommand("classify", "Pre-approximating, approximating and interpolation flags"));
    cl->add_option("--rel", rel_spec_, "Relation")->required();
    cl->callback([this] { emit(classify_json(classify(relation_flag(poset(), rel_spec_)))); });

    with_poset(cmd->add_subcommand("way-below", "The way-below relation of a poset"))
        ->callback([this] { emit(relation_to_json(way_below(poset()))); });

    auto* en = with_poset(cmd->add_subcommand("enumerate", "Every auxiliary relation on a poset"));
    en->add_flag("--count", count_, "Print only the number of relations");
    en->callback([this] {
      const auto all = enumerate_aux(poset());
      if (count_) {
        emit(std::to_string(all.size()));
        return;
      }
      Json arr = Json::array();
      for (const auto& r : all) arr.push_back(relation_to_json(r));
      emit(arr);
    });
  }

  void build_approx(CLI::App& app) {
    auto* cmd = app.add_subcommand("approx", "Lower and upper approximations");
    cmd->require_subcommand(1);
    for (const std::string op : {"lap", "uap"}) {
      auto* s = with_poset(cmd->add_subcommand(op, op == "lap" ? "Lower approximation" : "Upper approximation"));
      s->add_option("--rel", rel_spec_, "Relation")->required();
      s->add_option("--set", set_text_, "Subset as i,j,...")->required();
      s->add_flag("--json", json_, "Emit a JSON array");
      s->callback([this, op] {
        const auto p = poset();
        const auto r = relation_flag(p, rel_spec_);
        const auto a = set_flag(p, set_text_);
        emit_set(op == "lap" ? lap(r, a) : uap(r, a));
      });
    }
    auto* adj = with_poset(cmd->add_subcommand("adjoint", "Adjoint of lap (upper) or uap (lower)"));
    adj->add_option("--rel", rel_spec_, "Relation")->required();
    adj->add_option("--set", set_text_, "Subset as i,j,...")->required();
    adj->add_option("--of", adjoint_of_, "lap or uap")->required()->check(CLI::IsMember({"lap", "uap"}));
    adj->add_flag("--json", json_, "Emit a JSON array");
    adj->callback([this] {
      const auto p = poset();
      const auto r = relation_flag(p, rel_spec_);
      const auto b = set_flag(p, set_text_);
      emit_set(adjoint_of_ == "lap" ? lap_upper_adjoint(r, b) : uap_lower_adjoint(r, b));
    });
  }

  Topology topology_from_flags(const Poset& p) {
    if (rel_spec_.empty()) return scott_topology(p);
    try {
      return mu_topology(relation_flag(p, rel_spec_));
    } catch (const NotPreApproximating& e) {
      throw UsageError(std::string("--rel: ") + e.what());
    }
  }

  void emit_topology(const Topology& t) {
    if (dot_) {
      buf_ << opens_to_dot(t);
    } else {
      emit(opens_to_json(t));
    }
  }

  void build_topology(CLI::App& app) {
    auto* cmd = app.add_subcommand("topology", "The mu and Scott topologies");
    cmd->require_subcommand(1);

    auto* mu = with_poset(cmd->add_subcommand("mu", "Opens of the topology induced by a pre-approximating relation"));
    mu->add_option("--rel", rel_spec_, "Relation")->required();
    mu->add_flag("--dot", dot_, "Render the lattice of opens as DOT");
    mu->callback([this] { emit_topology(topology_from_flags(poset())); });

    auto* sc = with_poset(cmd->add_subcommand("scott", "Opens of the Scott topology"));
    sc->add_flag("--dot", dot_, "Render the lattice of opens as DOT");
    sc->callback([this] { emit_topology(scott_topology(poset())); });

    for (const std::string op : {"interior", "closure"}) {
      auto* s = with_poset(cmd->add_subcommand(op, op + " in the mu topology of --rel, or the Scott topology without it"));
      s->add_option("--rel", rel_spec_, "Relation");
      s->add_option("--set", set_text_, "Subset as i,j,...")->required();
      s->add_flag("--json", json_, "Emit a JSON array");
      s->callback([this, op] {
        const auto p = poset();
        const auto t = topology_from_flags(p);
        const auto a = set_flag(p, set_text_);
        emit_set(op == "interior" ? interior(t, a) : closure(t, a));
      });
    }

    auto* cs = with_poset(cmd->add_subcommand("cspace", "Is the topology a c-space"));
    cs->add_option("--rel", rel_spec_, "Relation (Scott topology without it)");
    cs->add_option("--mode", mode_, "specialization or underlying")
        ->check(CLI::IsMember({"specialization", "underlying"}))
        ->capture_default_str();
    cs->callback([this] {
      const auto t = topology_from_flags(poset());
      const auto mode = mode_ == "underlying" ? UpsetMode::underlying : UpsetMode::specialization;
      const auto res = is_c_space(t, mode);
      Json j;
      j["c_space"] = res.holds;
      j["mode"] = upset_mode_name(mode);
      j["t0"] = specialization_order(t).t0;
      if (res.witness) j["witness"] = {{"x", res.witness->first}, {"open", set_to_json(res.witness->second)}};
      emit(j);
    });
  }

  void build_closure(CLI::App& app) {
    auto* cmd = app.add_subcommand("closure", "One-step closure and meet-continuity");
    cmd->require_subcommand(1);

    auto* os = with_poset(cmd->add_subcommand("one-step", "A' for --set, or whether the poset has one-step closure"));
    os->add_option("--set", set_text_, "Subset as i,j,...");
    os->add_flag("--json", json_, "Emit a JSON array");
    os->callback([this] {
      const auto p = poset();
      if (!set_text_.empty()) {
        emit_set(one_step(p, set_flag(p, set_text_)));
        return;
      }
      const auto res = has_one_step_closure(p);
      Json j;
      j["one_step_closure"] = res.holds;
      j["closed_form"] = res.closed_form_holds;
      if (res.witness) j["witness"] = set_to_json(*res.witness);
      emit(j);
    });

    with_poset(cmd->add_subcommand("meet-continuous", "Is the poset meet-continuous"))->callback([this] {
      const auto res = is_meet_continuous(poset());
      Json j;
      j["meet_continuous"] = res.holds;
      if (res.witness) j["witness"] = {{"set", set_to_json(res.witness->first)}, {"x", res.witness->second}};
      emit(j);
    });
  }

  void build_family(CLI::App& app) {
    auto* cmd = app.add_subcommand("family", "Symbolic infinite families and their finite windows");
    cmd->require_subcommand(1);
    for (const auto f : {FamilyId::ladder, FamilyId::omega}) {
      auto* fam = cmd->add_subcommand(family_name(f), std::string("The ") + family_name(f) + " family");
      fam->require_subcommand(1);

      auto* ord = fam->add_subcommand("order", "Is X below Y");
      ord->add_option("x", term_x_, "Term")->required();
      ord->add_option("y", term_y_, "Term")->required();
      ord->callback([this, f] { emit(family_order(f, term_arg(f, term_x_), term_arg(f, term_y_)) ? "true" : "false"); });

      auto* mem = fam->add_subcommand("member", "Is X in a distinguished set");
      mem->add_option("--set", set_text_, "A, downA, Aprime or scott_closure_A")->required();
      mem->add_option("x", term_x_, "Term")->required();
      mem->callback([this, f] {
        DistinguishedSet s;
        try {
          s = parse_distinguished_set(set_text_);
        } catch (const Error& e) {
          throw UsageError(std::string("--set: ") + e.what());
        }
        emit(family_membership(f, s, term_arg(f, term_x_)) ? "true" : "false");
      });

      auto* wb = fam->add_subcommand("wb", "Is X way below Y");
      wb->add_option("x", term_x_, "Term")->required();
      wb->add_option("y", term_y_, "Term")->required();
      wb->callback([this, f] {
        try {
          emit(family_way_below(f, term_arg(f, term_x_), term_arg(f, term_y_)) ? "true" : "false");
        } catch (const BadParameters& e) {
          throw UsageError(std::string("family wb: ") + e.what());
        }
      });

      auto* win = fam->add_subcommand("window", "Finite window as poset JSON, or DOT with --dot");
      win->add_option("--m", m_, "Columns (ladder)")->capture_default_str();
      win->add_option("--n", n_, "Depth")->capture_default_str();
      win->add_flag("--dot", dot_, "Emit DOT");
      win->callback([this, f] {
        const auto w = window(f, m_, n_);
        if (dot_) {
          buf_ << window_dot(w);
        } else {
          emit(window_json(w));
        }
      });

      auto* ver = fam->add_subcommand("verify", "Soundness checks for one window");
      ver->add_option("--m", m_, "Columns (ladder)")->capture_default_str();
      ver->add_option("--n", n_, "Depth")->capture_default_str();
      ver->callback([this, f] {
        const auto rep = verify_window_soundness(f, m_, n_);
        emit(report_to_json(rep));
        code_ = report_exit(rep);
      });
    }
  }

  void emit_run(const RunReport& rep) {
    emit(rep.to_json());
    code_ = rep.exit_code();
  }

  void build_campaigns(CLI::App& app) {
    auto* check = app.add_subcommand("check", "Run theorem suites on one instance or over a scope");
    check->add_option("--suite", suites_, "Suite ids or all")->required();
    check->add_option("--poset", poset_path_, "Single poset (otherwise the scope flags apply)");
    check->add_option("--rel", rel_spec_, "Relation for the single poset (otherwise all relations)");
    check->add_option("--rel2", rel2_spec_, "Second relation for the algebra suite");
    check->add_option("--set", set_text_, "Restrict subset suites to this set");
    check->add_option("--jobs", jobs_, "Worker threads (0 = available parallelism)");
    check->add_flag("--timing", timing_, "Include elapsed time");
    check_scope_.attach(check);
    check->callback([this] { run_check(); });

    auto* search = app.add_subcommand("search", "Search for a counterexample to a registered property");
    search->add_option("--property", property_, "Property name");
    search->add_flag("--list", list_, "List registered properties");
    search->add_option("--poset", poset_path_, "Search only this poset (all relations)");
    search_scope_.attach(search);
    search->callback([this] {
      if (list_) {
        for (const auto& name : property_names()) emit(name);
        return;
      }
      if (property_.empty()) throw UsageError("search: --property is required");
      const auto scope = poset_path_.empty() ? search_scope_.build() : Scope::single(poset(), enumerate_aux(poset()));
      std::optional<Witness> w;
      try {
        w = search_counterexample(property_, scope);
      } catch (const BadParameters& e) {
        throw UsageError(std::string("--property: ") + e.what());
      }
      Json j;
      j["property"] = property_;
      j["scope"] = scope.describe();
      if (w) {
        j["witness"] = {{"fingerprint", w->fingerprint}, {"instance", w->instance}};
        code_ = 3;
      } else {
        j["witness"] = nullptr;
      }
      emit(j);
    });

    auto* verify = app.add_subcommand("verify", "Run theorem suites over an exhaustive or sampled scope");
    verify->add_option("--suite", suites_, "Suite ids or all")->capture_default_str();
    verify->add_option("--jobs", jobs_, "Worker threads (0 = available parallelism)");
    verify->add_flag("--timing", timing_, "Include elapsed time");
    verify_scope_.attach(verify);
    verify->callback([this] { emit_run(run_suite(verify_scope_.build(), resolved_suites(), {jobs_, timing_})); });
  }

  std::vector<std::string> resolved_suites() const {
    try {
      return resolve_suites(suites_);
    } catch (const BadParameters& e) {
      throw UsageError(std::string("--suite: ") + e.what());
    }
  }

  void run_check() {
    const auto suites = resolved_suites();
    if (poset_path_.empty()) {
      emit_run(run_suite(check_scope_.build(), suites, {jobs_, timing_}));
      return;
    }
    const auto p = poset();
    if (rel_spec_.empty()) {
      auto scope = Scope::single(p, enumerate_aux(p));
      emit_run(run_suite(scope, suites, {jobs_, timing_}));
      return;
    }
    const auto r = relation_flag(p, rel_spec_);
    const auto r2 = rel2_spec_.empty() ? r : relation_flag(p, rel2_spec_, "--rel2");
    std::optional<ElementSet> a;
    if (!set_text_.empty()) a = set_flag(p, set_text_);
    Report out;
    out.subject = "check " + poset_path_;
    for (const auto& s : suites) {
      const auto fp = fingerprint(p, &r, s == "algebra" ? &r2 : nullptr, a);
      out.merge(replay(s, fp));
    }
    emit(report_to_json(out));
    code_ = report_exit(out);
  }

  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream buf_;
  int code_ = 0;

  std::string out_path_;
  std::string poset_path_;
  std::string rel_spec_;
  std::string rel2_spec_;
  std::string set_text_;
  std::string pairs_text_;
  std::string kind_;
  std::string adjoint_of_;
  std::string mode_ = "specialization";
  std::string term_x_;
  std::string term_y_;
  std::string property_;
  std::vector<std::string> suites_{"all"};
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::uint64_t m_ = 0;
  std::uint64_t seed_ = 0;
  double prob_ = 0.5;
  unsigned jobs_ = 0;
  bool iso_ = false;
  bool count_ = false;
  bool dot_ = false;
  bool json_ = false;
  bool timing_ = false;
  bool list_ = false;
  ScopeFlags check_scope_;
  ScopeFlags search_scope_;
  ScopeFlags verify_scope_;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace orderlab
