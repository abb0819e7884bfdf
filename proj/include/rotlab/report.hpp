#pragma once

#include "rotlab/amalgam.hpp"
#include "rotlab/certify.hpp"
#include "rotlab/explore.hpp"
#include "rotlab/groups.hpp"
#include "rotlab/normalform.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rotlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "rotlab.report/1";

Json to_json(const Word& w);
Json to_json(const GroupSpec& s);
/// Grid of canonical "poly(N; ...)" strings plus an advisory numeric grid.
Json to_json(const ExactMat3& m);
Json to_json(const Presentation& p);
Json to_json(const StructureReport& r);
Json to_json(const Expression& e);
Json to_json(const RelationReport& r);
Json to_json(const IdentityVerdict& v);
Json to_json(const NormalFormReport& r);
Json to_json(const RewriteTrace& t);
Json to_json(const NonIdentityWitness& w);
Json to_json(const FreeCertificate& c);
Json to_json(const BatchSummary& b);
Json to_json(const BallReport& b);
Json to_json(const GrowthComparison& g);
Json to_json(const AmalgamNormalForm& nf);

/// {schema_version, command, inputs, result, diagnostics}.
Json make_document(const std::string& command, Json inputs, Json result, std::vector<std::string> diagnostics = {});

/// Indented key/value rendering of the same payload.
std::string render_text(const Json& doc);

/// "radius,count" lines with a header.
std::string ball_csv(const BallReport& b);

}  // namespace rotlab
