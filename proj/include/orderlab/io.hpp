#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orderlab/report.hpp"
#include "orderlab/topology.hpp"

namespace orderlab {

using Json = nlohmann::ordered_json;

/// {"n": int, "labels": [str]?, "relation": {"mode": "full-order"|"covers", "pairs": [[i,j],...]}}
/// Output uses covers mode with pairs sorted.
Json poset_to_json(const Poset& p);
/// Throws ParseError on malformed JSON and the poset-core errors on invalid orders.
Poset poset_from_json(const Json& j);

/// {"pairs": [[i,j],...]} with pairs sorted.
Json relation_to_json(const AuxRelation& r);
AuxRelation relation_from_json(const Poset& p, const Json& j);

/// Sorted index list, e.g. [0,2].
Json set_to_json(ElementSet s);

Json opens_to_json(const Topology& t);

/// {"law", "scope", "pass", "witnesses", "finding"?, "label"?}
Json verdict_to_json(const LawVerdict& v);
/// {"subject", "pass", "verdicts": [...], "statements": {...}}
Json report_to_json(const Report& r);

/// Reads and parses a JSON file; errors name the path.
Json read_json_file(const std::string& path);
Poset load_poset(const std::string& path);
AuxRelation load_relation(const Poset& p, const std::string& path);

/// Lattice of opens as a DOT Hasse diagram, nodes labelled by their sets.
std::string opens_to_dot(const Topology& t);

}  // namespace orderlab
