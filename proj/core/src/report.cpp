#include "smallworld/report.hpp"

#include <json.hpp>

namespace smallworld {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

// RFC 4180 quoting, applied only when the field needs it. Node tokens are
// whitespace-free but nothing stops them from containing commas or quotes.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

Json optional_number(const std::optional<double>& value) {
  if (value) return *value;
  return nullptr;
}

}  // namespace

const char* path_mode_name(PathMode mode) {
  switch (mode) {
    case PathMode::Undirected: return "undirected";
    case PathMode::Directed: return "directed";
    case PathMode::DirectedAsUndirected: return "as-undirected";
  }
  return "?";
}

const char* degree_mode_name(DegreeMode mode) {
  switch (mode) {
    case DegreeMode::Degree: return "degree";
    case DegreeMode::In: return "in";
    case DegreeMode::Out: return "out";
  }
  return "?";
}

const char* component_kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Connected: return "connected";
    case ComponentKind::Weak: return "weak";
    case ComponentKind::Strong: return "strong";
  }
  return "?";
}

std::string stats_json(const SummaryStats& stats) {
  Json out;
  out["node_count"] = stats.node_count;
  out["edge_count"] = stats.edge_count;
  out["edges_per_node"] = stats.edges_per_node;
  out["mean_degree"] = stats.mean_degree;
  out["median_degree"] = stats.median_degree;
  out["average_clustering"] = stats.average_clustering;
  if (stats.directed) {
    out["assortativity_in"] = optional_number(stats.assortativity_in);
    out["assortativity_out"] = optional_number(stats.assortativity_out);
  } else {
    out["assortativity"] = optional_number(stats.assortativity);
  }
  return dump(out);
}

std::string histogram_csv(const DegreeHistogram& histogram) {
  std::string out = "degree,count\n";
  for (auto [degree, count] : histogram.bins) {
    out += std::to_string(degree) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string histogram_json(const DegreeHistogram& histogram) {
  Json out;
  out["mode"] = degree_mode_name(histogram.mode);
  Json bins = Json::array();
  for (auto [degree, count] : histogram.bins) {
    bins.push_back(Json::array({degree, count}));
  }
  out["bins"] = std::move(bins);
  return dump(out);
}

std::string components_csv(const ComponentLabeling& labeling) {
  std::string out = "component_index,size\n";
  for (std::size_t i = 0; i < labeling.sizes.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(labeling.sizes[i]) + "\n";
  }
  return out;
}

std::string components_json(const ComponentLabeling& labeling) {
  Json out;
  out["kind"] = component_kind_name(labeling.kind);
  out["count"] = labeling.count();
  out["largest"] = labeling.largest();
  out["failure_probability"] =
      labeling.sizes.empty() ? Json(nullptr)
                             : Json(cross_component_failure_probability(labeling));
  return dump(out);
}

std::string er_baseline_json(const ErBaseline& baseline,
                             double input_clustering) {
  Json out;
  out["n"] = baseline.params.n;
  out["p"] = baseline.params.p;
  out["generated_edges"] = baseline.graph.edge_count();
  out["baseline_clustering"] = baseline.baseline_clustering;
  out["input_clustering"] = input_clustering;
  out["ratio"] = baseline.baseline_clustering > 0.0
                     ? Json(input_clustering / baseline.baseline_clustering)
                     : Json(nullptr);
  out["seed"] = baseline.params.seed;
  return dump(out);
}

namespace {

Json milgram_object(const MilgramResult& result, std::uint64_t seed,
                    PathMode mode) {
  Json out;
  out["trials"] = result.trials;
  out["successes"] = result.successes;
  out["failures"] = result.failures;
  out["failure_rate"] = result.failure_rate;
  out["mean_path_length"] = optional_number(result.mean_path_length);
  out["mean_rounded"] = result.mean_rounded
                            ? Json(*result.mean_rounded)
                            : Json(nullptr);
  Json histogram = Json::array();
  for (auto [length, count] : result.length_histogram) {
    histogram.push_back(Json::array({length, count}));
  }
  out["histogram"] = std::move(histogram);
  out["seed"] = seed;
  out["mode"] = path_mode_name(mode);
  return out;
}

}  // namespace

std::string milgram_json(const MilgramResult& result, std::uint64_t seed,
                         PathMode mode) {
  return dump(milgram_object(result, seed, mode));
}

std::string milgram_schedule_json(const std::vector<MilgramRun>& runs) {
  Json out = Json::array();
  for (const MilgramRun& run : runs) {
    out.push_back(milgram_object(run.result, run.seed, run.mode));
  }
  return dump(out);
}

std::string milgram_histogram_csv(const MilgramResult& result) {
  std::string out = "length,count\n";
  for (auto [length, count] : result.length_histogram) {
    out += std::to_string(length) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string compare_csv(const CompareTable& table) {
  std::string out = "id,primary_value,cross_value\n";
  for (const RankRow& row : table.rows) {
    out += csv_field(row.external_id) + "," +
           std::to_string(row.primary_value) + "," +
           (row.cross_value ? std::to_string(*row.cross_value)
                            : std::string("None")) +
           "\n";
  }
  return out;
}

std::string compare_json(const CompareTable& table) {
  Json out;
  out["direction"] = std::string(table.primary_directed ? "indegree" : "degree") +
                     "-to-" + (table.cross_directed ? "indegree" : "degree");
  out["k"] = table.k;
  out["rank_overlap"] = table.rank_overlap;
  Json rows = Json::array();
  for (const RankRow& row : table.rows) {
    Json entry;
    entry["id"] = row.external_id;
    entry["primary_value"] = row.primary_value;
    entry["cross_value"] =
        row.cross_value ? Json(*row.cross_value) : Json(nullptr);
    rows.push_back(std::move(entry));
  }
  out["rows"] = std::move(rows);
  return dump(out);
}

std::string top_k_csv(const std::vector<RankedNode>& ranking) {
  std::string out = "id,value\n";
  for (const RankedNode& entry : ranking) {
    out += csv_field(entry.external_id) + "," + std::to_string(entry.value) +
           "\n";
  }
  return out;
}

std::string top_k_json(const std::vector<RankedNode>& ranking,
                       DegreeMode mode) {
  Json out;
  out["mode"] = degree_mode_name(mode);
  out["k"] = ranking.size();
  Json rows = Json::array();
  for (const RankedNode& entry : ranking) {
    Json row;
    row["id"] = entry.external_id;
    row["value"] = entry.value;
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return dump(out);
}

}  // namespace smallworld
