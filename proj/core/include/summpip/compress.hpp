#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "summpip/cluster.hpp"
#include "summpip/ingest.hpp"
#include "summpip/resources.hpp"
#include "summpip/word_graph.hpp"

namespace summpip {

struct CompressConfig {
  std::size_t min_words = 5;   // alpha
  std::size_t k_paths = 100;
};

struct CompressionCandidate {
  std::vector<std::size_t> path;   // node ids, START..END
  std::vector<std::string> words;  // lowercased words, START/END excluded
  std::vector<std::string> surfaces;
  double total_weight = 0.0;       // sum of arc weights
  double raw_weight = 0.0;         // total_weight / length
  double rerank_score = 0.0;
  std::size_t length = 0;          // nodes excluding START/END
};

/// Number of non-punctuation word nodes on a path.
std::size_t content_word_count(const WordGraph& graph, std::span<const std::size_t> path);
bool has_verb(const WordGraph& graph, std::span<const std::size_t> path);

/// The K lightest loopless paths, minus those with fewer than `min_words`
/// content words or no VERB node. Order of enumeration is kept.
std::vector<CompressionCandidate> k_shortest_paths(const WordGraph& graph, std::size_t K, std::size_t min_words);

/// TextRank over NOUN/ADJ non-stopword tokens. Adjacent candidate tokens are
/// linked (undirected, unweighted); scores start at 1 and iterate
///   s(v) = 0.15 + 0.85 * sum_{u ~ v} s(u) / deg(u)
/// until the largest change is below 1e-6 or 100 rounds. Phrases are maximal
/// runs of candidate tokens, keyed by their space-joined lowercase words and
/// scored by the sum of their word scores.
std::map<std::string, double> keyphrase_scores(std::span<const Sentence> sentences, const PosLexicon& pos);

/// Fills rerank_score = raw_weight / (length * (1 + sum of contained phrase
/// scores)) on every candidate and returns the minimum; ties go to the
/// shorter path, then the smaller word sequence. Throws std::invalid_argument
/// on an empty list.
CompressionCandidate rerank(std::vector<CompressionCandidate>& candidates, const std::map<std::string, double>& phrases);

/// Joins tokens with spaces, attaching closing punctuation and clitics to
/// the previous token and opening brackets to the next; capitalizes the
/// first character.
std::string realize(std::span<const std::string> tokens);

/// Index of the sentence with the highest mean cosine to the others (lowest
/// index on ties). Requires a non-empty list.
std::size_t centroid_sentence(std::span<const Sentence> sentences, const WordVectorStore& vectors);

struct CompressionResult {
  std::string text;
  bool fallback = false;
  std::vector<std::string> words;  // lowercased output tokens
};

CompressionResult compress_cluster_detailed(std::span<const Sentence> sentences, const Resources& resources,
                                            const CompressConfig& config);
std::string compress_cluster(std::span<const Sentence> sentences, const Resources& resources,
                             const CompressConfig& config);

struct Summary {
  std::vector<std::string> sentences;
  std::vector<std::size_t> source_cluster_ids;
  std::vector<CompressionResult> details;  // parallel to sentences

  std::string text() const;  // sentences joined by single spaces
};

/// Compresses each non-empty cluster of `assignment`, orders the outputs by
/// the smallest global index in each cluster and drops exact duplicates.
Summary assemble_summary(const ClusterAssignment& assignment, std::span<const Sentence> sentences,
                         const Resources& resources, const CompressConfig& config);

}  // namespace summpip
