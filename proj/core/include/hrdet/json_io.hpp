#pragma once

// JSON bindings: complexes in/out, reports, and check outcomes. Key order is
// fixed so reruns produce identical documents.

#include <json.hpp>

#include "hrdet/artinian.hpp"
#include "hrdet/fixtures.hpp"

namespace hrdet {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hrdet-report/1";

Json face_to_json(Face f);
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

Json topology_to_json(const TopologyReport& rep);
Json hilbert_to_json(const HilbertReport& rep);

}  // namespace hrdet
