#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orderlab {

/// Verdict for one law on one scope.
///
/// A failing verdict carries witnesses that re-fail on replay. A verdict with
/// `finding` set passes but records an observation that disagrees with a
/// published claim; it never fails a run.
struct LawVerdict {
  std::string law;
  std::string scope;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::optional<std::string> finding;
  /// "finite-trivial" or "discriminating" where the distinction applies.
  std::optional<std::string> label;
};

/// Result of a checker: per-law verdicts plus the named boolean statements the
/// checker evaluated (e.g. the five statements of an equivalence theorem).
struct Report {
  std::string subject;
  std::vector<LawVerdict> verdicts;
  std::vector<std::pair<std::string, bool>> statements;

  bool passed() const;
  bool has_findings() const;
  const LawVerdict* find(const std::string& law) const;
  std::optional<bool> statement(const std::string& name) const;

  LawVerdict& add(std::string law, std::string scope, bool pass,
                  std::vector<std::string> witnesses = {});
  void merge(const Report& other);
};

using ApproxReport = Report;
using ClosureReport = Report;

}  // namespace orderlab
