#pragma once

#include "dmf/congruence.hpp"
#include "dmf/relations.hpp"

#include <json.hpp>

namespace dmf {

using Json = nlohmann::ordered_json;

// {"val", "prec", "terms": [{"exp", "coeff"}...]}, terms ascending.
Json series_to_json(const USeries& s);
USeries series_from_json(const FieldCtx& field, const Json& j);

Json witness_to_json(const CongruenceWitness& w);

Json relation_to_json(const FieldCtx& field, const RelationVector& v);
// {"q", "k", "l", "N", "phi": [relations...], "kernel": [[...]...],
//  "phi_rank", "kernel_dim", "spans_equal"}
Json report_to_json(const FieldCtx& field, const RelationReport& rep);

Json vector_to_json(const Vector& v);

}  // namespace dmf
