#pragma once

#include <string>

#include "json.hpp"
#include "rbg/derived.hpp"
#include "rbg/enumerate.hpp"
#include "rbg/extension.hpp"
#include "rbg/lie_ring.hpp"
#include "rbg/operator.hpp"

namespace rbg {

using Json = nlohmann::json;

// Every reader throws schema_violation with the JSON pointer of the
// offending value; unknown fields are rejected. Object keys come out sorted,
// so dump() output is canonical.

/// Group JSON:
///   {"name", "kind": "table", "table": [[int]], "labels"?: [str]}
///   {"name", "kind": "perm", "perm_gens": [[int]], "labels"?: generator names}
///   {"name", "kind": "direct", "factors": [group...]}
///   {"name", "kind": "semidirect", "factors": [H, L], "action": [[int]]}
///     action[l] lists the images of H's elements under l
///   {"name", "kind": "wreath", "factors": [H, L]}
GroupPtr group_from_json(const Json& j);
/// Always written as a table.
Json group_to_json(const FiniteGroup& g);

/// {"group": name or content hash, "weight": 1|-1, "images": [int],
///  "provenance"?: {"construction": str, "params": {str: str}}}
Json operator_to_json(const RBOperator& b);
/// The "group" field must match g's name or content hash.
RBOperator operator_from_json(const Json& j, const GroupPtr& g);

/// {"group", "hash", "method", "count", "operators": [[int]],
///  "classes"?: [[int]], "splitting_map": [{"op", "kernel", "image"}],
///  "elementary_verdict": {...}}
Json census_to_json(const Census& c);
Census census_from_json(const Json& j, const GroupPtr& g);

Json report_to_json(const StructureReport& r);
/// {"group", "identity", "circle_table", "structure"}
Json derived_to_json(const DerivedGroup& d, const StructureReport& r);

Json word_to_json(const BarWord& w);
/// {"status", "basis", "cond", "witness"?, "gbar"?, "extension"?}
Json extension_to_json(const ExtensionResult& r);

/// {"layers": [...], "bracket_nonzeros"}
Json lie_ring_to_json(const GradedLieRing& l);
Json lie_operator_to_json(const LieRBOperator& r, const LieVerdict& v);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace rbg
