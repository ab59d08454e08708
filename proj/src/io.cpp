#include "orderlab/io.hpp"

#include <fstream>
#include <sstream>

namespace orderlab {

namespace {

std::vector<Pair> pairs_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": \"pairs\" must be an array");
  std::vector<Pair> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError(std::string(what) + ": each pair must be [i, j] with non-negative integers");
    out.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  return out;
}

Json pairs_to_json(const std::vector<Pair>& pairs) {
  Json arr = Json::array();
  for (const auto& [i, j] : pairs) arr.push_back({i, j});
  return arr;
}

}  // namespace

Json poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.size();
  if (!p.labels().empty()) j["labels"] = p.labels();
  j["relation"] = {{"mode", "covers"}, {"pairs", pairs_to_json(hasse(p))}};
  return j;
}

Poset poset_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("poset: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("poset: missing non-negative integer \"n\"");
  if (!j.contains("relation") || !j["relation"].is_object()) throw ParseError("poset: missing \"relation\" object");
  const auto& rel = j["relation"];
  const std::string mode = rel.value("mode", "full-order");
  RelationMode m;
  if (mode == "full-order") {
    m = RelationMode::full_order;
  } else if (mode == "covers") {
    m = RelationMode::covers;
  } else {
    throw ParseError("poset: unknown relation mode \"" + mode + "\"");
  }
  if (!rel.contains("pairs")) throw ParseError("poset: missing \"pairs\"");
  const auto n = j["n"].get<std::size_t>();
  auto pairs = pairs_from_json(rel["pairs"], "poset");
  Poset p = validate_poset(n, pairs, m);
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (!l.is_array() || l.size() != n) throw ParseError("poset: \"labels\" must be an array of n strings");
    std::vector<std::string> labels;
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("poset: labels must be strings");
      labels.push_back(s.get<std::string>());
    }
    p = p.with_labels(std::move(labels));
  }
  return p;
}

Json relation_to_json(const AuxRelation& r) { return {{"pairs", pairs_to_json(r.pairs())}}; }

AuxRelation relation_from_json(const Poset& p, const Json& j) {
  if (!j.is_object() || !j.contains("pairs")) throw ParseError("relation: expected {\"pairs\": [...]}");
  return validate_aux(p, pairs_from_json(j["pairs"], "relation"));
}

Json set_to_json(ElementSet s) { return s.indices(); }

Json opens_to_json(const Topology& t) {
  Json arr = Json::array();
  for (const auto& o : t.opens()) arr.push_back(set_to_json(o));
  return arr;
}

Json verdict_to_json(const LawVerdict& v) {
  Json j;
  j["law"] = v.law;
  j["scope"] = v.scope;
  j["pass"] = v.pass;
  j["witnesses"] = v.witnesses;
  if (v.finding) j["finding"] = *v.finding;
  if (v.label) j["label"] = *v.label;
  return j;
}

Json report_to_json(const Report& r) {
  Json j;
  j["subject"] = r.subject;
  j["pass"] = r.passed();
  j["verdicts"] = Json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(verdict_to_json(v));
  j["statements"] = Json::object();
  for (const auto& [k, v] : r.statements) j["statements"][k] = v;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Poset load_poset(const std::string& path) {
  try {
    return poset_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
    throw ParseError(path + ": " + msg);
  }
}

AuxRelation load_relation(const Poset& p, const std::string& path) {
  try {
    return relation_from_json(p, read_json_file(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
    throw ParseError(path + ": " + msg);
  }
}

std::string opens_to_dot(const Topology& t) {
  const auto& o = t.opens();
  std::ostringstream out;
  out << "digraph opens {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < o.size(); ++i) out << "  o" << i << " [label=\"" << braced(o[i]) << "\"];\n";
  // Covers in the inclusion order: a strictly inside b with nothing strictly between.
  for (std::size_t a = 0; a < o.size(); ++a)
    for (std::size_t b = 0; b < o.size(); ++b) {
      if (a == b || !o[a].subset_of(o[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < o.size() && cover; ++c)
        if (c != a && c != b && o[a].subset_of(o[c]) && o[c].subset_of(o[b])) cover = false;
      if (cover) out << "  o" << a << " -> o" << b << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace orderlab
