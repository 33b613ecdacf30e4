#include "summpip/word_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace summpip {

namespace {

constexpr double kGrid = 0x1.0p-32;
const std::string kStartWord = "<s>";
const std::string kEndWord = "</s>";

struct TaggedSentence {
  const Sentence* sentence;
  std::vector<CoarsePos> tags;

  // Case-folded word at `position` in START/tokens/END numbering.
  const std::string& word_at(std::size_t position) const {
    if (position == 0) return kStartWord;
    if (position > sentence->tokens.size()) return kEndWord;
    return sentence->tokens[position - 1].lower;
  }
  bool is_content(std::size_t position) const {
    if (position == 0 || position > sentence->tokens.size()) return false;
    const auto& t = sentence->tokens[position - 1];
    return !t.is_punct && !t.is_stopword;
  }
};

bool node_less(const WordGraph& g, std::size_t a, std::size_t b) {
  const auto& ka = g.key(a);
  const auto& kb = g.key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

bool sequence_less(const WordGraph& g, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](std::size_t x, std::size_t y) { return node_less(g, x, y); });
}

// Lightest path from `source` to END avoiding banned nodes and arcs; among
// equally light paths the lexicographically smallest node-key sequence.
std::optional<std::vector<std::size_t>> best_path(const WordGraph& g, std::size_t source,
                                                  const std::vector<bool>& banned_node,
                                                  const std::set<std::pair<std::size_t, std::size_t>>& banned_arc) {
  const std::size_t n = g.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::vector<bool> done(n, false);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[WordGraph::kEnd] = 0.0;
  heap.emplace(0.0, WordGraph::kEnd);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto& [u, w] : g.predecessors(v)) {
      if (banned_node[u] || banned_arc.count({u, v}) > 0) continue;
      double nd = d + w;
      if (nd < dist[u]) {
        dist[u] = nd;
        heap.emplace(nd, u);
      }
    }
  }
  if (dist[source] == kInf) return std::nullopt;

  // Sums are exact on the weight grid, so tight arcs are found by equality.
  std::vector<std::size_t> path{source};
  std::size_t u = source;
  while (u != WordGraph::kEnd) {
    std::size_t next = n;
    for (const auto& [v, w] : g.successors(u)) {
      if (banned_node[v] || banned_arc.count({u, v}) > 0 || dist[v] == kInf) continue;
      if (w + dist[v] != dist[u] || !(dist[v] < dist[u])) continue;
      if (next == n || node_less(g, v, next)) next = v;
    }
    if (next == n) return std::nullopt;
    path.push_back(next);
    u = next;
  }
  return path;
}

}  // namespace

std::string WordNode::key() const {
  switch (kind) {
    case NodeKind::kStart: return "<START>";
    case NodeKind::kEnd: return "<END>";
    case NodeKind::kWord: break;
  }
  return word + "/" + std::string(to_string(pos));
}

const std::string& WordNode::surface() const {
  const auto& pool = surfaces.empty() ? initial_surfaces : surfaces;
  if (pool.empty()) return word;
  std::size_t best = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (pool[i].second > pool[best].second) best = i;
  }
  return pool[best].first;
}

bool WordNode::has_occurrence_in(std::size_t sentence) const {
  return std::any_of(occurrences.begin(), occurrences.end(),
                     [&](const Occurrence& o) { return o.sentence == sentence; });
}

WordGraph::WordGraph() {
  WordNode start;
  start.kind = NodeKind::kStart;
  start.word = kStartWord;
  start.pos = CoarsePos::kOther;
  WordNode end;
  end.kind = NodeKind::kEnd;
  end.word = kEndWord;
  end.pos = CoarsePos::kOther;
  add_node(std::move(start));
  add_node(std::move(end));
}

std::size_t WordGraph::add_node(WordNode node) {
  keys_.push_back(node.key());
  nodes_.push_back(std::move(node));
  out_.emplace_back();
  in_.emplace_back();
  return nodes_.size() - 1;
}

void WordGraph::set_arc(std::size_t u, std::size_t v, double weight) {
  if (!(weight > 0.0)) throw std::invalid_argument("arc weight must be positive");
  if (u >= size() || v >= size()) throw std::invalid_argument("arc endpoint out of range");
  weight = quantize_weight(weight);
  auto upsert = [](std::vector<std::pair<std::size_t, double>>& list, std::size_t id, double w) {
    auto it = std::lower_bound(list.begin(), list.end(), id, [](const auto& p, std::size_t x) { return p.first < x; });
    if (it != list.end() && it->first == id) {
      it->second = w;
      return false;
    }
    list.insert(it, {id, w});
    return true;
  };
  if (upsert(out_[u], v, weight)) ++arc_count_;
  upsert(in_[v], u, weight);
}

std::optional<double> WordGraph::arc_weight(std::size_t u, std::size_t v) const {
  const auto& list = out_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v, [](const auto& p, std::size_t x) { return p.first < x; });
  if (it == list.end() || it->first != v) return std::nullopt;
  return it->second;
}

double quantize_weight(double w) { return std::max(kGrid, std::round(w / kGrid) * kGrid); }

WordGraph build_word_graph(std::span<const Sentence> sentences, const PosLexicon& pos) {
  WordGraph graph;
  std::vector<TaggedSentence> tagged;
  tagged.reserve(sentences.size());
  for (const auto& s : sentences) {
    TaggedSentence ts{&s, {}};
    for (const auto& t : s.tokens) ts.tags.push_back(pos.tag(t));
    tagged.push_back(std::move(ts));
  }

  // node id per (sentence, position), START/END included
  std::vector<std::vector<std::size_t>> mapping(sentences.size());

  for (std::size_t s = 0; s < tagged.size(); ++s) {
    const auto& ts = tagged[s];
    const std::size_t m = ts.sentence->tokens.size();
    mapping[s].assign(m + 2, 0);
    mapping[s][0] = WordGraph::kStart;
    mapping[s][m + 1] = WordGraph::kEnd;
    graph.node(WordGraph::kStart).occurrences.push_back({s, 0});
    graph.node(WordGraph::kEnd).occurrences.push_back({s, m + 1});

    for (std::size_t p = 1; p <= m; ++p) {
      const Token& tok = ts.sentence->tokens[p - 1];
      const CoarsePos tag = ts.tags[p - 1];
      const bool content = !tok.is_punct && !tok.is_stopword;

      std::size_t chosen = graph.size();
      std::size_t best_score = 0;
      for (std::size_t id = 2; id < graph.size(); ++id) {
        const auto& node = graph.node(id);
        if (node.word != tok.lower || node.pos != tag || node.has_occurrence_in(s)) continue;
        std::size_t score = 0;
        for (const auto& occ : node.occurrences) {
          const auto& other = tagged[occ.sentence];
          bool left_ok = content || ts.is_content(p - 1);
          bool right_ok = content || ts.is_content(p + 1);
          if (left_ok && other.word_at(occ.position - 1) == ts.word_at(p - 1)) ++score;
          if (right_ok && other.word_at(occ.position + 1) == ts.word_at(p + 1)) ++score;
        }
        if (!content && score == 0) continue;
        bool better = chosen == graph.size() || score > best_score ||
                      (score == best_score && node.frequency() > graph.node(chosen).frequency());
        if (better) {
          chosen = id;
          best_score = score;
        }
      }
      if (chosen == graph.size()) {
        WordNode node;
        node.word = tok.lower;
        node.pos = tag;
        node.stopword = tok.is_stopword;
        node.punct = tok.is_punct;
        chosen = graph.add_node(std::move(node));
      }
      auto& node = graph.node(chosen);
      node.occurrences.push_back({s, p});
      auto& pool = p == 1 ? node.initial_surfaces : node.surfaces;
      auto it = std::find_if(pool.begin(), pool.end(), [&](const auto& e) { return e.first == tok.surface; });
      if (it == pool.end()) pool.emplace_back(tok.surface, 1);
      else ++it->second;
      mapping[s][p] = chosen;
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& path : mapping) {
    for (std::size_t p = 0; p + 1 < path.size(); ++p) arcs.insert({path[p], path[p + 1]});
  }
  for (const auto& [u, v] : arcs) {
    const auto& nu = graph.node(u);
    const auto& nv = graph.node(v);
    double inverse_sum = 0.0;
    for (std::size_t s = 0; s < mapping.size(); ++s) {
      std::size_t pu = 0, pv = 0;
      bool hu = false, hv = false;
      for (const auto& o : nu.occurrences) {
        if (o.sentence == s) pu = o.position, hu = true;
      }
      for (const auto& o : nv.occurrences) {
        if (o.sentence == s) pv = o.position, hv = true;
      }
      if (hu && hv && pu < pv) inverse_sum += 1.0 / static_cast<double>(pv - pu);
    }
    const auto fu = static_cast<double>(nu.frequency());
    const auto fv = static_cast<double>(nv.frequency());
    double w = (fu + fv) / inverse_sum;
    graph.set_arc(u, v, w / (fu * fv));
  }
  return graph;
}

double path_weight(const WordGraph& graph, std::span<const std::size_t> path) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto w = graph.arc_weight(path[i], path[i + 1]);
    if (!w) throw std::invalid_argument("path uses a missing arc");
    total += *w;
  }
  return total;
}

bool path_less(const WordGraph& graph, const WeightedPath& a, const WeightedPath& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  return sequence_less(graph, a.nodes, b.nodes);
}

std::vector<WeightedPath> shortest_paths(const WordGraph& graph, std::size_t K) {
  std::vector<WeightedPath> found;
  if (K == 0) return found;
  const std::size_t n = graph.size();
  std::vector<bool> no_nodes(n, false);
  auto first = best_path(graph, WordGraph::kStart, no_nodes, {});
  if (!first) return found;
  found.push_back({*first, path_weight(graph, *first)});

  auto cmp = [&](const WeightedPath& a, const WeightedPath& b) { return path_less(graph, a, b); };
  std::set<WeightedPath, decltype(cmp)> candidates(cmp);
  std::set<std::vector<std::size_t>> seen{*first};

  while (found.size() < K) {
    const std::vector<std::size_t> prev = found.back().nodes;
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
      const std::size_t spur = prev[i];
      std::set<std::pair<std::size_t, std::size_t>> banned_arc;
      for (const auto& p : found) {
        if (p.nodes.size() > i + 1 && std::equal(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                                 p.nodes.begin())) {
          banned_arc.insert({p.nodes[i], p.nodes[i + 1]});
        }
      }
      std::vector<bool> banned_node(n, false);
      for (std::size_t r = 0; r < i; ++r) banned_node[prev[r]] = true;

      auto spur_path = best_path(graph, spur, banned_node, banned_arc);
      if (!spur_path) continue;
      std::vector<std::size_t> total(prev.begin(), prev.begin() + static_cast<std::ptrdiff_t>(i));
      total.insert(total.end(), spur_path->begin(), spur_path->end());
      if (!seen.insert(total).second) continue;
      double w = path_weight(graph, total);
      candidates.insert({std::move(total), w});
    }
    if (candidates.empty()) break;
    found.push_back(*candidates.begin());
    candidates.erase(candidates.begin());
  }
  return found;
}

}  // namespace summpip
