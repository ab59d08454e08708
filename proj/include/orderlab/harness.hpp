#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orderlab/families.hpp"
#include "orderlab/io.hpp"

namespace orderlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class RelationSource { enumerate, sample, builtins, explicit_ };
enum class SubsetSource { all, sample };

/// What a run quantifies over: posets, then relations on each poset, then
/// subsets for the suites that take one.
struct Scope {
  std::vector<Poset> posets;
  std::string poset_description;

  RelationSource relations = RelationSource::enumerate;
  /// builtins: any of "leq", "way-below", "bottom".
  std::vector<std::string> builtins;
  std::vector<AuxRelation> explicit_relations;
  std::size_t relation_samples = 0;

  SubsetSource subsets = SubsetSource::all;
  std::size_t subset_samples = 0;

  std::uint64_t seed = 0;
  /// Instances beyond the cap are not run and the report is marked incomplete.
  std::size_t instance_cap = 1u << 20;
  /// Checked between instances.
  std::optional<double> wall_time_cap_s;

  /// Every labeled poset with 1..max_n elements, all auxiliary relations, all subsets.
  static Scope exhaustive(std::size_t max_n);
  /// A single poset with explicit relations.
  static Scope single(const Poset& p, std::vector<AuxRelation> relations);

  std::string describe() const;
};

/// Throws BadParameters on inconsistent scopes (zero caps, sampling without a count).
void validate_scope(const Scope& s);

/// Suite ids: int-char, partition, algebra, chain, continuity, cspace,
/// mu-topology, one-step (alias sec5), laws, adjoint.
const std::vector<std::string>& all_suites();
/// Expands "all" and checks names; throws BadParameters on unknown ids.
std::vector<std::string> resolve_suites(const std::vector<std::string>& ids);

struct Failure {
  std::string suite;
  std::string law;
  std::string fingerprint;
  std::vector<std::string> witnesses;
};

/// Recorded disagreements with published claims, one record per instance.
struct Finding {
  std::string suite;
  std::string fingerprint;
  std::vector<std::string> laws;
  std::vector<std::string> witnesses;
};

struct RunReport {
  std::vector<std::string> suites;
  std::string scope;
  std::uint64_t seed = 0;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::vector<Failure> failures;
  std::vector<Finding> findings;
  bool complete = true;
  std::optional<double> elapsed_s;

  /// 0 pass, 3 pass with findings, 1 failures or incomplete.
  int exit_code() const;
  Json to_json() const;
};

struct RunOptions {
  /// 0 means hardware concurrency.
  unsigned jobs = 1;
  bool timing = false;
};

RunReport run_suite(const Scope& scope, const std::vector<std::string>& suites, const RunOptions& opts = {});

/// "p:<n>:<hex up-rows>" then optional "|r:<hex below-rows>", "|r2:<...>",
/// "|a:<hex subset>". Rows are dot-separated.
std::string fingerprint(const Poset& p, const AuxRelation* r = nullptr, const AuxRelation* r2 = nullptr,
                        std::optional<ElementSet> a = std::nullopt);

struct DecodedInstance {
  Poset poset;
  std::optional<AuxRelation> relation;
  std::optional<AuxRelation> second;
  std::optional<ElementSet> subset;
};

/// Throws ParseError or the validation errors of the decoded parts.
DecodedInstance decode_fingerprint(const std::string& fp);

/// Re-runs one suite on one fingerprinted instance.
Report replay(const std::string& suite, const std::string& fp);

/// A property holds on an instance when it is a counterexample.
struct Property {
  std::string name;
  /// Per-relation properties see each relation; per-poset ones get nullptr.
  bool per_relation = true;
  std::function<bool(const Poset&, const AuxRelation*)> is_counterexample;
};

/// Built-ins: cspace-implies-approximating, cdl-implies-approximating,
/// one-step-without-continuity, int-equivalence-break.
void register_property(Property p);
std::vector<std::string> property_names();

struct Witness {
  std::string property;
  std::string fingerprint;
  Json instance;
};

/// First counterexample in scope order. Throws BadParameters for unknown
/// properties and BudgetExceeded when the instance cap is hit.
std::optional<Witness> search_counterexample(const std::string& property, const Scope& scope);

}  // namespace orderlab
