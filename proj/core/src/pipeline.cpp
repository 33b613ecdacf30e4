#include "summpip/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "summpip/cluster.hpp"
#include "summpip/compress.hpp"
#include "summpip/errors.hpp"
#include "summpip/graph.hpp"
#include "summpip/ingest.hpp"

namespace summpip {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_sentences(const std::vector<Sentence>& sentences, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size() && i < n; ++i) {
    if (!out.empty()) out += ' ';
    out += sentences[i].text;
  }
  return out;
}

void add_timings(StageTimings& into, const StageTimings& t) {
  into.ingest_seconds += t.ingest_seconds;
  into.graph_seconds += t.graph_seconds;
  into.cluster_seconds += t.cluster_seconds;
  into.compress_seconds += t.compress_seconds;
}

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

void write_lines(const std::vector<std::string>& lines, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& l : lines) out << l << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void PipelineConfig::validate() const {
  if (token_budget == 0) throw std::invalid_argument("token_budget must be positive");
  if (num_clusters == 0) throw std::invalid_argument("num_clusters must be positive");
  if (min_words == 0) throw std::invalid_argument("min_words must be positive");
  if (!(sim_threshold > 0.0 && sim_threshold <= 1.0)) throw std::invalid_argument("sim_threshold must be in (0, 1]");
  if (neighbor_count == 0) throw std::invalid_argument("neighbor_count must be positive");
  if (k_paths == 0) throw std::invalid_argument("k_paths must be positive");
  if (seed == 0) throw std::invalid_argument("seed must be positive");
  if (workers == 0) throw std::invalid_argument("workers must be positive");
  if (doc_separator.empty()) throw std::invalid_argument("doc_separator must be non-empty");
}

void apply_preset(PipelineConfig& config, std::string_view name) {
  if (name == "multinews") {
    config.token_budget = 500;
    config.num_clusters = 9;
    config.min_words = 5;
  } else if (name == "duc2004") {
    config.token_budget = 1500;
    config.num_clusters = 7;
    config.min_words = 14;
  } else {
    throw std::invalid_argument("unknown preset: " + std::string(name));
  }
}

std::string summarize_cluster(const DocumentCluster& cluster, const Resources& resources,
                              const PipelineConfig& config, ClusterStats& stats, StageTimings& timings) {
  auto t = Clock::now();
  DocumentCluster segmented = cluster;
  if (segmented.sentences.empty()) segment_cluster(segmented, resources.stopwords, resources.abbreviations);
  if (segmented.sentences.empty()) {
    timings.ingest_seconds += seconds_since(t);
    return {};
  }
  auto truncated = truncate_cluster(segmented, config.token_budget);
  stats.sentences = truncated.sentences.size();
  timings.ingest_seconds += seconds_since(t);

  t = Clock::now();
  GraphConfig gc;
  gc.sim_threshold = config.sim_threshold;
  gc.neighbor_count = config.neighbor_count;
  gc.weighted = config.weighted_graph;
  auto graph = build_sentence_graph(truncated, resources, gc);
  stats.edges = graph.edge_count();
  if (!config.dump_graph_dir.empty()) {
    const auto path = config.dump_graph_dir / (cluster.id + ".edges");
    std::ofstream dump(path, std::ios::binary);
    if (!dump) throw IoError("cannot write " + path.string());
    write_edge_list(graph, dump);
  }
  timings.graph_seconds += seconds_since(t);

  t = Clock::now();
  auto assignment = cluster_sentences(graph, config.num_clusters, config.seed);
  stats.clusters = assignment.non_empty();
  if (!config.dump_clusters_dir.empty()) {
    const auto path = config.dump_clusters_dir / (cluster.id + ".clusters");
    std::ofstream dump(path, std::ios::binary);
    if (!dump) throw IoError("cannot write " + path.string());
    write_assignment(assignment, dump);
  }
  timings.cluster_seconds += seconds_since(t);

  t = Clock::now();
  CompressConfig cc;
  cc.min_words = config.min_words;
  cc.k_paths = config.k_paths;
  auto summary = assemble_summary(assignment, truncated.sentences, resources, cc);
  for (const auto& d : summary.details) stats.fallback_compressions += d.fallback ? 1 : 0;
  timings.compress_seconds += seconds_since(t);
  return summary.text();
}

PipelineReport summarize_all(const PipelineConfig& config, const Resources& resources,
                             std::vector<DocumentCluster> clusters) {
  config.validate();
  PipelineReport report;
  const std::size_t n = clusters.size();
  report.summaries.resize(n);
  report.stats.resize(n);

  std::atomic<std::size_t> next{0};
  std::mutex timing_mutex;
  auto work = [&] {
    StageTimings local;
    for (std::size_t i = next++; i < n; i = next++) {
      ClusterStats stats;
      try {
        report.summaries[i] = summarize_cluster(clusters[i], resources, config, stats, local);
      } catch (const std::exception& e) {
        DocumentCluster c = clusters[i];
        c.sentences.clear();
        try {
          segment_cluster(c, resources.stopwords, resources.abbreviations);
        } catch (const std::exception&) {
          c.sentences.clear();
        }
        report.summaries[i] = join_sentences(c.sentences, config.num_clusters);
        stats.warning = std::string("lead fallback: ") + e.what();
      }
      report.stats[i] = std::move(stats);
    }
    std::lock_guard lock(timing_mutex);
    add_timings(report.timings, local);
  };

  const std::size_t workers = std::min(config.workers, std::max<std::size_t>(1, n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return report;
}

PipelineReport run_pipeline(const PipelineConfig& config, const std::filesystem::path& input,
                            const std::filesystem::path& output, const std::filesystem::path& manifest) {
  config.validate();
  const auto start = Clock::now();
  auto resources = load_resources(config.resources);
  auto clusters = load_cluster_file(input, config.doc_separator);
  const double load_seconds = seconds_since(start);

  auto report = summarize_all(config, resources, std::move(clusters));
  report.timings.load_seconds = load_seconds;
  write_lines(report.summaries, output);
  report.timings.total_seconds = seconds_since(start);
  if (!manifest.empty()) write_manifest(config, report, manifest);
  return report;
}

void write_manifest(const PipelineConfig& config, const PipelineReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "config.token_budget=" << config.token_budget << '\n'
      << "config.num_clusters=" << config.num_clusters << '\n'
      << "config.min_words=" << config.min_words << '\n'
      << "config.sim_threshold=" << format_double(config.sim_threshold, "%.6g") << '\n'
      << "config.neighbor_count=" << config.neighbor_count << '\n'
      << "config.k_paths=" << config.k_paths << '\n'
      << "config.weighted_graph=" << (config.weighted_graph ? "true" : "false") << '\n'
      << "config.workers=" << config.workers << '\n'
      << "seed=" << config.seed << '\n'
      << "resources.vectors=" << config.resources.vectors.string() << '\n'
      << "resources.stopwords=" << config.resources.stopwords.string() << '\n'
      << "resources.abbreviations=" << config.resources.abbreviations.string() << '\n'
      << "resources.markers=" << config.resources.markers.string() << '\n'
      << "resources.deverbal=" << config.resources.deverbal.string() << '\n'
      << "resources.gazetteer=" << config.resources.gazetteer.string() << '\n'
      << "resources.verbs=" << config.resources.verbs.string() << '\n'
      << "resources.pos_lexicon=" << config.resources.pos_lexicon.string() << '\n';
  const auto& t = report.timings;
  out << "timing.load_seconds=" << format_double(t.load_seconds, "%.3f") << '\n'
      << "timing.ingest_seconds=" << format_double(t.ingest_seconds, "%.3f") << '\n'
      << "timing.graph_seconds=" << format_double(t.graph_seconds, "%.3f") << '\n'
      << "timing.cluster_seconds=" << format_double(t.cluster_seconds, "%.3f") << '\n'
      << "timing.compress_seconds=" << format_double(t.compress_seconds, "%.3f") << '\n'
      << "timing.total_seconds=" << format_double(t.total_seconds, "%.3f") << '\n';
  std::size_t warnings = 0;
  for (const auto& s : report.stats) warnings += s.warning ? 1 : 0;
  out << "instances=" << report.stats.size() << '\n' << "warnings=" << warnings << '\n';
  for (std::size_t i = 0; i < report.stats.size(); ++i) {
    const auto& s = report.stats[i];
    const std::string p = "instance." + std::to_string(i + 1) + '.';
    out << p << "sentences=" << s.sentences << '\n'
        << p << "edges=" << s.edges << '\n'
        << p << "clusters=" << s.clusters << '\n'
        << p << "fallback_compressions=" << s.fallback_compressions << '\n';
    if (s.warning) out << p << "warning=" << *s.warning << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> read_summary_file(const std::filesystem::path& path) { return read_lines(path); }

CorpusReport run_eval(const std::filesystem::path& candidates, const std::filesystem::path& references) {
  auto c = read_summary_file(candidates);
  auto r = read_summary_file(references);
  if (c.size() != r.size()) {
    throw std::invalid_argument("line count mismatch: " + std::to_string(c.size()) + " candidates, " +
                                std::to_string(r.size()) + " references");
  }
  return evaluate_corpus(c, r);
}

std::vector<std::string> lead_summaries(const std::vector<DocumentCluster>& clusters, const WordSet& abbreviations,
                                        std::size_t n) {
  std::vector<std::string> out;
  out.reserve(clusters.size());
  const WordSet no_stopwords;
  for (auto c : clusters) {
    segment_cluster(c, no_stopwords, abbreviations);
    out.push_back(join_sentences(c.sentences, n));
  }
  return out;
}

void run_baseline_lead(const std::filesystem::path& input, const std::filesystem::path& output, std::size_t n,
                       const WordSet& abbreviations, std::string_view separator) {
  if (n == 0) throw std::invalid_argument("lead: sentence count must be positive");
  write_lines(lead_summaries(load_cluster_file(input, separator), abbreviations, n), output);
}

}  // namespace summpip
