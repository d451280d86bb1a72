#pragma once

#include <string>

#include "json.hpp"

#include "gel/audit.hpp"
#include "gel/closure.hpp"
#include "gel/discharging.hpp"
#include "gel/script.hpp"
#include "gel/search.hpp"
#include "gel/windmill.hpp"

namespace gel {

using Json = nlohmann::json;

// Every top-level document carries {"schema": kSchemaVersion, "type": ...}.
inline constexpr const char* kSchemaVersion = "gel/1";

// Adds the schema and type tags.
Json document(const std::string& type, Json body);
// Throws ParseError(0, ...) when the schema or type does not match.
void expect_document(const Json& j, const std::string& type);

Json graph_json(const Graph& g);
Graph graph_from_json(const Json& j);

// [[u, v, "p/q"], ...] in edge order.
Json labeling_json(const Labeling& phi);
Labeling labeling_from_json(const Json& j);

CertKind cert_kind_from_name(const std::string& name);  // throws ParseError
Json certificate_json(const Certificate& c);  // without the document tags
Certificate certificate_from_json(const Json& j);

Json violation_json(const Violation& v);
Json quad_json(const GluQuad& q);

Json params_json(const CatalogParams& p);
CatalogParams params_from_json(const Json& j);
Json script_json(const CompositionScript& s);
CompositionScript script_from_json(const Json& j);

Json ledger_json(const ChargeLedger& l, const Graph& g);
Json positive_json(const PositiveReport& r);
Json audit_json(const CandidateAudit& a);

Json windmill_json(const Windmill& w);
Json flag_report_json(const FlagReport& r);
Json flag_graph_json(const FlagGraph& f);
Json construction_json(const ConstructionScript& s);
Json closure_json(const ClosureResult& r);

}  // namespace gel
