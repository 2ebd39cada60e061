#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smallworld/compare.hpp"
#include "smallworld/components.hpp"
#include "smallworld/metrics.hpp"
#include "smallworld/milgram.hpp"
#include "smallworld/random_model.hpp"

// Serialization of result types to the published JSON/CSV shapes. Everything
// returns a complete document ending in a newline; callers decide where it
// goes. Undefined statistics render as JSON null.
namespace smallworld {

const char* path_mode_name(PathMode mode);             // "undirected" etc.
const char* degree_mode_name(DegreeMode mode);         // "degree", "in", "out"
const char* component_kind_name(ComponentKind kind);   // "connected" etc.

std::string stats_json(const SummaryStats& stats);

std::string histogram_csv(const DegreeHistogram& histogram);
std::string histogram_json(const DegreeHistogram& histogram);

std::string components_csv(const ComponentLabeling& labeling);
std::string components_json(const ComponentLabeling& labeling);

std::string er_baseline_json(const ErBaseline& baseline,
                             double input_clustering);

std::string milgram_json(const MilgramResult& result, std::uint64_t seed,
                         PathMode mode);
std::string milgram_histogram_csv(const MilgramResult& result);

// One element per run, for multi-run schedules; emitted as a JSON array of
// the same objects milgram_json produces.
struct MilgramRun {
  MilgramResult result;
  std::uint64_t seed = 0;
  PathMode mode = PathMode::Undirected;
};
std::string milgram_schedule_json(const std::vector<MilgramRun>& runs);

std::string compare_csv(const CompareTable& table);
std::string compare_json(const CompareTable& table);

std::string top_k_csv(const std::vector<RankedNode>& ranking);
std::string top_k_json(const std::vector<RankedNode>& ranking,
                       DegreeMode mode);

}  // namespace smallworld
