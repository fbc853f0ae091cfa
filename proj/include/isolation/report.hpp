#pragma once

#include <json.hpp>

#include "isolation/exact.hpp"
#include "isolation/proof_gap.hpp"
#include "isolation/verify.hpp"

namespace isolation {

using Json = nlohmann::ordered_json;

/// {"kind": "kclique", "k": 3} or {"kind": "cycle", "k": null}.
Json to_json(const TargetPattern& t);
TargetPattern target_from_json(const Json& j);

/// {"verdict", "class", "witness", "target"}; "class" is null on PASS.
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// {"classes": m, "colors": [...]}.
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j);

Json to_json(const ProofGapReport& report);

}  // namespace isolation
