#pragma once

#include <json.hpp>

#include "cisgraph/cis_recognition.hpp"
#include "cisgraph/counterexamples.hpp"
#include "cisgraph/graph.hpp"
#include "cisgraph/line_graphs.hpp"
#include "cisgraph/matching.hpp"
#include "cisgraph/sets_oracle.hpp"

namespace cisgraph {

/// Report schema version stamped on every CLI document.
inline constexpr const char* kSchemaTag = "cisgraph/1";

void to_json(nlohmann::json& j, const Graph& g);
void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const Matching& m);
void to_json(nlohmann::json& j, const CombWitness& w);
void to_json(nlohmann::json& j, const RootCertificate& c);
void to_json(nlohmann::json& j, const RimForm& f);
void to_json(nlohmann::json& j, const CisResult& r);
void to_json(nlohmann::json& j, const ComponentReport& c);
void to_json(nlohmann::json& j, const Refutation& r);
void to_json(nlohmann::json& j, const RecognitionReport& r);
void to_json(nlohmann::json& j, const AlphaOmegaReport& r);
void to_json(nlohmann::json& j, const WeightedBoundReport& r);
void to_json(nlohmann::json& j, const ViolationRow& r);

const char* to_string(RecognitionVerdict v);
const char* to_string(ComponentForm f);
const char* to_string(RimVerdict v);

} // namespace cisgraph
