#include "summpip/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace summpip {

namespace {

constexpr double kMinWeight = 1e-6;

std::set<std::string> content_lowers(const Sentence& s) {
  std::set<std::string> out;
  for (const auto& t : s.tokens) {
    if (!t.is_punct && !t.is_stopword) out.insert(t.lower);
  }
  return out;
}

std::vector<std::string> verb_lemmas(const Sentence& s, const Resources& r) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) {
    if (t.is_punct || t.is_stopword || r.pos.tag(t.lower) != CoarsePos::kVerb) continue;
    out.push_back(r.verbs.lemmatize(t.lower).value_or(t.lower));
  }
  return out;
}

bool entity_overlap(const std::vector<EntityMention>& a, const std::vector<EntityMention>& b) {
  for (const auto& x : a) {
    std::string xs = to_lower(x.surface);
    for (const auto& y : b) {
      if (x.type == y.type && xs == to_lower(y.surface)) return true;
    }
  }
  return false;
}

bool intersects(const std::set<std::string>& a, const std::set<std::string>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) return true;
    if (*ia < *ib) ++ia;
    else ++ib;
  }
  return false;
}

}  // namespace

std::string_view to_string(EdgeRule rule) {
  switch (rule) {
    case EdgeRule::kDeverbal: return "DEVERBAL";
    case EdgeRule::kEntity: return "ENTITY";
    case EdgeRule::kMarker: return "MARKER";
    case EdgeRule::kSimilarity: return "SIMILARITY";
  }
  return "SIMILARITY";
}

void SentenceGraph::add_edge(std::size_t i, std::size_t j, EdgeRule rule, double weight) {
  if (i == j) throw std::invalid_argument("self loop");
  if (i >= n_ || j >= n_) throw std::invalid_argument("node index out of range");
  if (!(weight > 0.0 && weight <= 1.0)) throw std::invalid_argument("edge weight outside (0, 1]");
  auto& labels = edges_[{std::min(i, j), std::max(i, j)}];
  for (auto& l : labels) l.weight = weight;
  if (std::none_of(labels.begin(), labels.end(), [&](const EdgeLabel& l) { return l.rule == rule; })) {
    labels.push_back({rule, weight});
    std::sort(labels.begin(), labels.end(), [](const EdgeLabel& a, const EdgeLabel& b) { return a.rule < b.rule; });
  }
}

bool SentenceGraph::has_edge(std::size_t i, std::size_t j) const { return labels(i, j) != nullptr; }

const std::vector<EdgeLabel>* SentenceGraph::labels(std::size_t i, std::size_t j) const {
  auto it = edges_.find({std::min(i, j), std::max(i, j)});
  return it == edges_.end() ? nullptr : &it->second;
}

double SentenceGraph::weight(std::size_t i, std::size_t j) const {
  const auto* l = labels(i, j);
  return l == nullptr ? 0.0 : l->front().weight;
}

bool edge_deverbal(const Sentence& s_i, const Sentence& s_j, const Resources& resources,
                   std::size_t neighbor_count) {
  if (s_i.doc_index != s_j.doc_index || s_i.global_index >= s_j.global_index) return false;
  auto targets = content_lowers(s_j);
  for (const auto& lemma : verb_lemmas(s_i, resources)) {
    if (intersects(deverbal_nouns(lemma, resources.deverbal, resources.vectors, neighbor_count), targets)) return true;
  }
  return false;
}

bool edge_entity(const Sentence& s_i, const Sentence& s_j, const Gazetteer& gazetteer) {
  return entity_overlap(detect_entities(s_i, gazetteer), detect_entities(s_j, gazetteer));
}

bool edge_marker(const Sentence& s_i, const Sentence& s_j, const MarkerList& markers) {
  if (s_i.doc_index != s_j.doc_index || s_j.sent_index != s_i.sent_index + 1) return false;
  return markers.starts_with_marker(s_j.tokens);
}

bool edge_similarity(const Sentence& s_i, const Sentence& s_j, const WordVectorStore& store, double threshold) {
  return cosine(sentence_embedding(s_i, store), sentence_embedding(s_j, store)) >= threshold;
}

SentenceGraph build_sentence_graph(const DocumentCluster& cluster, const Resources& resources,
                                   const GraphConfig& config) {
  const auto& sents = cluster.sentences;
  const std::size_t n = sents.size();
  SentenceGraph graph(n, config.weighted);

  // Per-sentence features are computed once; the pair loop only compares them.
  std::vector<std::vector<double>> embeddings;
  std::vector<std::vector<EntityMention>> entities;
  std::vector<std::set<std::string>> contents;
  std::vector<std::set<std::string>> derived;
  std::unordered_map<std::string, std::set<std::string>> noun_cache;
  embeddings.reserve(n);
  for (const auto& s : sents) {
    embeddings.push_back(sentence_embedding(s, resources.vectors));
    entities.push_back(detect_entities(s, resources.gazetteer));
    contents.push_back(content_lowers(s));
    std::set<std::string> nouns;
    for (const auto& lemma : verb_lemmas(s, resources)) {
      auto it = noun_cache.find(lemma);
      if (it == noun_cache.end()) {
        it = noun_cache.emplace(lemma, deverbal_nouns(lemma, resources.deverbal, resources.vectors,
                                                      config.neighbor_count)).first;
      }
      nouns.insert(it->second.begin(), it->second.end());
    }
    derived.push_back(std::move(nouns));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double sim = cosine(embeddings[i], embeddings[j]);
      std::vector<EdgeRule> rules;
      if (sents[i].doc_index == sents[j].doc_index && intersects(derived[i], contents[j])) {
        rules.push_back(EdgeRule::kDeverbal);
      }
      if (entity_overlap(entities[i], entities[j])) rules.push_back(EdgeRule::kEntity);
      if (edge_marker(sents[i], sents[j], resources.markers)) rules.push_back(EdgeRule::kMarker);
      if (sim >= config.sim_threshold) rules.push_back(EdgeRule::kSimilarity);
      if (rules.empty()) continue;
      const double w = config.weighted ? std::clamp(sim, kMinWeight, 1.0) : 1.0;
      for (auto rule : rules) graph.add_edge(i, j, rule, w);
    }
  }
  return graph;
}

void write_edge_list(const SentenceGraph& graph, std::ostream& out) {
  char buf[32];
  for (const auto& [pair, labels] : graph.edges()) {
    out << pair.first << ' ' << pair.second << ' ';
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (k > 0) out << ',';
      out << to_string(labels[k].rule);
    }
    std::snprintf(buf, sizeof buf, "%.6f", labels.front().weight);
    out << ' ' << buf << '\n';
  }
}

}  // namespace summpip
