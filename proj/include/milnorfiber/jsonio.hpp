#pragma once

#include <string>

#include <json.hpp>

#include "milnorfiber/oracles.hpp"
#include "milnorfiber/pipeline.hpp"

namespace mf {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kZetaConvention = "eulerchar";

Json graph_to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const Json& j);

std::string graph_to_dot(const DecoratedGraph& g);
DecoratedGraph graph_from_dot(const std::string& text);

Json zeta_to_json(const CycloProduct& z);
Json branches_to_json(const PairExpansion& ex);
PairExpansion branches_from_json(const Json& j);

Json fiber_to_json(const FiberDescription& fd);
Json surgery_to_json(const SurgeryRecord& s);
Json coverings_to_json(const std::vector<CoveringDatum>& v);
Json classification_to_json(const HomotopyClass& h);

// Consolidated invariants payload (deterministic, no timestamps).
Json invariants_to_json(const PipelineResult& r);
Json report_to_json(const ConsistencyReport& rep);

std::string render_text_invariants(const PipelineResult& r);
std::string render_text_report(const ConsistencyReport& rep);

}  // namespace mf
