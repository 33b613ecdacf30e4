#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <string_view>
#include <utility>
#include <vector>

#include "summpip/ingest.hpp"
#include "summpip/resources.hpp"

namespace summpip {

enum class EdgeRule { kDeverbal, kEntity, kMarker, kSimilarity };

std::string_view to_string(EdgeRule rule);

struct EdgeLabel {
  EdgeRule rule = EdgeRule::kSimilarity;
  double weight = 1.0;  // in (0, 1]

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

/// Undirected sentence graph. Edges are stored once under (min, max); every
/// label on a pair carries the pair's weight, and labels are kept sorted by
/// rule so the graph does not depend on insertion order.
class SentenceGraph {
 public:
  using EdgeMap = std::map<std::pair<std::size_t, std::size_t>, std::vector<EdgeLabel>>;

  explicit SentenceGraph(std::size_t n = 0, bool weighted_mode = false) : n_(n), weighted_(weighted_mode) {}

  std::size_t size() const noexcept { return n_; }
  bool weighted_mode() const noexcept { return weighted_; }

  /// Adds `rule` to the (i, j) pair. Throws std::invalid_argument for self
  /// loops, out-of-range nodes, or a weight outside (0, 1].
  void add_edge(std::size_t i, std::size_t j, EdgeRule rule, double weight = 1.0);

  bool has_edge(std::size_t i, std::size_t j) const;
  /// Labels of (i, j) in either orientation; nullptr when absent.
  const std::vector<EdgeLabel>* labels(std::size_t i, std::size_t j) const;
  /// Adjacency weight, 0 when there is no edge.
  double weight(std::size_t i, std::size_t j) const;

  std::size_t edge_count() const noexcept { return edges_.size(); }
  const EdgeMap& edges() const noexcept { return edges_; }

 private:
  std::size_t n_;
  bool weighted_;
  EdgeMap edges_;
};

struct GraphConfig {
  double sim_threshold = 0.98;
  std::size_t neighbor_count = 10;
  bool weighted = false;
};

/// s_j mentions a deverbal noun (or an embedding neighbour of one) of a verb
/// in s_i. Forward-only within one document; false when s_j does not come
/// after s_i in the same document.
bool edge_deverbal(const Sentence& s_i, const Sentence& s_j, const Resources& resources,
                   std::size_t neighbor_count);

/// Both sentences mention an entity with equal case-folded surface and equal type.
bool edge_entity(const Sentence& s_i, const Sentence& s_j, const Gazetteer& gazetteer);

/// s_j directly follows s_i in the same document and opens with a marker.
bool edge_marker(const Sentence& s_i, const Sentence& s_j, const MarkerList& markers);

/// Cosine of the averaged word vectors reaches `threshold`.
bool edge_similarity(const Sentence& s_i, const Sentence& s_j, const WordVectorStore& store, double threshold);

/// Tests every sentence pair against the four rules and unions the results.
/// Similarity and entity rules apply across documents; marker and deverbal
/// rules only within a document.
SentenceGraph build_sentence_graph(const DocumentCluster& cluster, const Resources& resources,
                                   const GraphConfig& config = {});

/// Debug dump: "i j RULE[,RULE...] weight" per edge, i < j, ascending.
void write_edge_list(const SentenceGraph& graph, std::ostream& out);

}  // namespace summpip
