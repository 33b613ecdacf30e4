#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "summpip/ingest.hpp"
#include "summpip/resources.hpp"

namespace summpip {

enum class NodeKind { kStart, kEnd, kWord };

struct Occurrence {
  std::size_t sentence = 0;  // index into the sentence list the graph was built from
  std::size_t position = 0;  // START is 0, tokens 1..m, END m+1
};

struct WordNode {
  NodeKind kind = NodeKind::kWord;
  std::string word;  // case-folded
  CoarsePos pos = CoarsePos::kNoun;
  bool stopword = false;
  bool punct = false;
  std::vector<Occurrence> occurrences;
  // original casings in first-seen order with counts; sentence-initial
  // casings are kept apart because they are capitalized by position
  std::vector<std::pair<std::string, std::size_t>> surfaces;
  std::vector<std::pair<std::string, std::size_t>> initial_surfaces;

  /// "word/POS", or "<START>" / "<END>".
  std::string key() const;
  /// Most frequent original casing, earliest on ties. Casings seen in
  /// sentence-initial position count only when there is no other.
  const std::string& surface() const;
  std::size_t frequency() const noexcept { return occurrences.size(); }
  bool has_occurrence_in(std::size_t sentence) const;
};

/// Directed word-adjacency graph with one START and one END node. Arc
/// weights lie on a 2^-32 grid, so a path's total weight is an exact sum
/// and does not depend on summation order.
class WordGraph {
 public:
  static constexpr std::size_t kStart = 0;
  static constexpr std::size_t kEnd = 1;

  WordGraph();

  std::size_t add_node(WordNode node);
  /// Creates or overwrites u -> v. Throws std::invalid_argument unless weight > 0.
  void set_arc(std::size_t u, std::size_t v, double weight);

  const std::vector<WordNode>& nodes() const noexcept { return nodes_; }
  WordNode& node(std::size_t id) { return nodes_[id]; }
  const WordNode& node(std::size_t id) const { return nodes_[id]; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Outgoing / incoming arcs as (node, weight), sorted by node id.
  const std::vector<std::pair<std::size_t, double>>& successors(std::size_t u) const { return out_[u]; }
  const std::vector<std::pair<std::size_t, double>>& predecessors(std::size_t v) const { return in_[v]; }
  std::optional<double> arc_weight(std::size_t u, std::size_t v) const;
  std::size_t arc_count() const noexcept { return arc_count_; }

  /// Cached node keys, index-aligned with nodes().
  const std::string& key(std::size_t id) const { return keys_[id]; }

 private:
  std::vector<WordNode> nodes_;
  std::vector<std::string> keys_;
  std::vector<std::vector<std::pair<std::size_t, double>>> out_;
  std::vector<std::vector<std::pair<std::size_t, double>>> in_;
  std::size_t arc_count_ = 0;
};

/// Rounds a positive weight onto the 2^-32 grid (never to zero).
double quantize_weight(double w);

/// Builds the word graph of a sentence cluster.
///
/// Sentences are added in order. A token joins an existing node with the
/// same (word, POS) key only if that node has no occurrence from the current
/// sentence. Among several such nodes a content word picks the one whose
/// occurrences share the most left/right neighbours with the token, then the
/// most frequent, then the oldest. Stopwords and punctuation join only when
/// an adjacent content word matches; otherwise they get a fresh node.
///
/// Arc u -> v exists when v directly follows u in some sentence, weighted
///   w = (f_u + f_v) / sum_s 1/(pos_s(v) - pos_s(u))  /  (f_u * f_v)
/// over sentences s where u precedes v; f is occurrence count.
WordGraph build_word_graph(std::span<const Sentence> sentences, const PosLexicon& pos);

struct WeightedPath {
  std::vector<std::size_t> nodes;
  double weight = 0.0;
};

double path_weight(const WordGraph& graph, std::span<const std::size_t> path);

/// Total order on paths: weight, then node keys lexicographically (node id
/// breaks key ties).
bool path_less(const WordGraph& graph, const WeightedPath& a, const WeightedPath& b);

/// Up to K loopless START -> END paths, lightest first (Yen's deviation
/// algorithm), ordered by path_less.
std::vector<WeightedPath> shortest_paths(const WordGraph& graph, std::size_t K);

}  // namespace summpip
