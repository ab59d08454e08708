#include "orderlab/report.hpp"

#include <algorithm>

namespace orderlab {

bool Report::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const LawVerdict& v) { return v.pass; });
}

bool Report::has_findings() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const LawVerdict& v) { return v.finding.has_value(); });
}

const LawVerdict* Report::find(const std::string& law) const {
  for (const auto& v : verdicts)
    if (v.law == law) return &v;
  return nullptr;
}

std::optional<bool> Report::statement(const std::string& name) const {
  for (const auto& [k, v] : statements)
    if (k == name) return v;
  return std::nullopt;
}

LawVerdict& Report::add(std::string law, std::string scope, bool pass,
                        std::vector<std::string> witnesses) {
  verdicts.push_back({std::move(law), std::move(scope), pass, std::move(witnesses), {}, {}});
  return verdicts.back();
}

void Report::merge(const Report& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
  statements.insert(statements.end(), other.statements.begin(), other.statements.end());
}

}  // namespace orderlab
