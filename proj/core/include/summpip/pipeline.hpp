#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summpip/resources.hpp"
#include "summpip/rouge.hpp"

namespace summpip {

struct PipelineConfig {
  std::size_t token_budget = 500;
  std::size_t num_clusters = 9;
  std::size_t min_words = 5;
  double sim_threshold = 0.98;
  std::size_t neighbor_count = 10;
  std::size_t k_paths = 100;
  std::uint64_t seed = 42;
  bool weighted_graph = false;
  std::size_t workers = 1;
  std::string doc_separator = std::string(kDefaultDocSeparator);
  ResourcePaths resources;
  // Debug dumps, one file per cluster named after the cluster id; off when empty.
  std::filesystem::path dump_graph_dir;
  std::filesystem::path dump_clusters_dir;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

/// "multinews" (500 tokens, k 9, alpha 5) or "duc2004" (1500, 7, 14).
/// Other fields are left untouched. Throws std::invalid_argument on an
/// unknown name.
void apply_preset(PipelineConfig& config, std::string_view name);

struct ClusterStats {
  std::size_t sentences = 0;  // after truncation
  std::size_t edges = 0;
  std::size_t clusters = 0;   // non-empty sentence clusters
  std::size_t fallback_compressions = 0;
  std::optional<std::string> warning;  // set when the Lead-k fallback was used
};

struct StageTimings {
  double load_seconds = 0.0;
  double ingest_seconds = 0.0;
  double graph_seconds = 0.0;
  double cluster_seconds = 0.0;
  double compress_seconds = 0.0;
  double total_seconds = 0.0;
};

struct PipelineReport {
  std::vector<std::string> summaries;
  std::vector<ClusterStats> stats;
  StageTimings timings;
};

/// Summarizes one already-segmented cluster. Exceptions propagate.
std::string summarize_cluster(const DocumentCluster& cluster, const Resources& resources,
                              const PipelineConfig& config, ClusterStats& stats, StageTimings& timings);

/// Summarizes every line of `input` into `output`, one line per input line,
/// in input order. A cluster that throws falls back to its first k
/// sentences and a warning is recorded. Writes `manifest` when non-empty.
/// Resource loading failures are thrown before any cluster is processed.
PipelineReport run_pipeline(const PipelineConfig& config, const std::filesystem::path& input,
                            const std::filesystem::path& output, const std::filesystem::path& manifest = {});

/// In-memory variant used by run_pipeline.
PipelineReport summarize_all(const PipelineConfig& config, const Resources& resources,
                             std::vector<DocumentCluster> clusters);

void write_manifest(const PipelineConfig& config, const PipelineReport& report, const std::filesystem::path& path);

/// Scores a candidate file against a reference file line by line. Throws
/// std::invalid_argument when the line counts differ.
CorpusReport run_eval(const std::filesystem::path& candidates, const std::filesystem::path& references);

/// First `n` sentences of each cluster (before any truncation), one line per cluster.
std::vector<std::string> lead_summaries(const std::vector<DocumentCluster>& clusters, const WordSet& abbreviations,
                                        std::size_t n);

/// Writes lead_summaries of `input` to `output`.
void run_baseline_lead(const std::filesystem::path& input, const std::filesystem::path& output, std::size_t n,
                       const WordSet& abbreviations, std::string_view separator = kDefaultDocSeparator);

/// Lines of a text file, keeping empty lines (unlike cluster loading).
std::vector<std::string> read_summary_file(const std::filesystem::path& path);

}  // namespace summpip
