#include "summpip/compress.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace summpip {

namespace {

constexpr double kDamping = 0.85;
constexpr double kTolerance = 1e-6;
constexpr std::size_t kMaxRounds = 100;

bool attaches_left(const std::string& t) {
  static const WordSet closing = {".", ",", ";", ":", "!", "?", ")", "]", "}", "%", "...", "\xE2\x80\x99",
                                  "\xE2\x80\x9D", "''"};
  if (closing.count(t) > 0) return true;
  if (t == "n't" || t == "N'T") return true;
  if (t.size() > 1 && (t.front() == '\'' || t.rfind("\xE2\x80\x99", 0) == 0)) return true;
  return is_punctuation(t) && t.find_first_not_of(".,;:!?") == std::string::npos;
}

bool attaches_right(const std::string& t) {
  static const WordSet opening = {"(", "[", "{", "$", "\xE2\x80\x9C", "\xE2\x80\x98", "``"};
  return opening.count(t) > 0;
}

bool is_candidate(const Token& t, const PosLexicon& pos) {
  if (t.is_punct || t.is_stopword) return false;
  auto tag = pos.tag(t);
  return tag == CoarsePos::kNoun || tag == CoarsePos::kAdj;
}

bool contains_phrase(const std::vector<std::string>& words, const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > words.size()) return false;
  return std::search(words.begin(), words.end(), phrase.begin(), phrase.end()) != words.end();
}

std::vector<std::string> split_phrase(const std::string& phrase) {
  std::vector<std::string> out;
  for (auto part : split_whitespace(phrase)) out.emplace_back(part);
  return out;
}

bool candidate_less(const CompressionCandidate& a, const CompressionCandidate& b) {
  if (a.rerank_score != b.rerank_score) return a.rerank_score < b.rerank_score;
  if (a.length != b.length) return a.length < b.length;
  return a.words < b.words;
}

}  // namespace

std::size_t content_word_count(const WordGraph& graph, std::span<const std::size_t> path) {
  std::size_t n = 0;
  for (auto id : path) {
    const auto& node = graph.node(id);
    if (node.kind == NodeKind::kWord && !node.punct) ++n;
  }
  return n;
}

bool has_verb(const WordGraph& graph, std::span<const std::size_t> path) {
  return std::any_of(path.begin(), path.end(), [&](std::size_t id) {
    const auto& node = graph.node(id);
    return node.kind == NodeKind::kWord && node.pos == CoarsePos::kVerb;
  });
}

std::vector<CompressionCandidate> k_shortest_paths(const WordGraph& graph, std::size_t K, std::size_t min_words) {
  if (K < 1 || min_words < 1) throw std::invalid_argument("k_shortest_paths: K and min_words must be positive");
  std::vector<CompressionCandidate> out;
  for (auto& p : shortest_paths(graph, K)) {
    if (content_word_count(graph, p.nodes) < min_words || !has_verb(graph, p.nodes)) continue;
    CompressionCandidate c;
    c.path = p.nodes;
    for (auto id : p.nodes) {
      const auto& node = graph.node(id);
      if (node.kind != NodeKind::kWord) continue;
      c.words.push_back(node.word);
      c.surfaces.push_back(node.surface());
    }
    c.length = c.words.size();
    c.total_weight = p.weight;
    c.raw_weight = p.weight / static_cast<double>(c.length);
    out.push_back(std::move(c));
  }
  return out;
}

std::map<std::string, double> keyphrase_scores(std::span<const Sentence> sentences, const PosLexicon& pos) {
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<bool>> flags;
  for (const auto& s : sentences) {
    std::vector<bool> f;
    for (const auto& t : s.tokens) {
      f.push_back(is_candidate(t, pos));
      if (f.back()) index.emplace(t.lower, index.size());
    }
    flags.push_back(std::move(f));
  }
  if (index.empty()) return {};

  const std::size_t n = index.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto& toks = sentences[s].tokens;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
      if (!flags[s][i] || !flags[s][i + 1]) continue;
      auto a = index.at(toks[i].lower);
      auto b = index.at(toks[i + 1].lower);
      if (a == b) continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  std::vector<double> score(n, 1.0);
  for (std::size_t round = 0; round < kMaxRounds; ++round) {
    std::vector<double> next(n, 1.0 - kDamping);
    for (std::size_t v = 0; v < n; ++v) {
      for (auto u : adj[v]) next[v] += kDamping * score[u] / static_cast<double>(adj[u].size());
    }
    double delta = 0.0;
    for (std::size_t v = 0; v < n; ++v) delta = std::max(delta, std::abs(next[v] - score[v]));
    score = std::move(next);
    if (delta < kTolerance) break;
  }

  std::map<std::string, double> phrases;
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto& toks = sentences[s].tokens;
    std::size_t i = 0;
    while (i < toks.size()) {
      if (!flags[s][i]) {
        ++i;
        continue;
      }
      std::string key;
      double total = 0.0;
      for (; i < toks.size() && flags[s][i]; ++i) {
        if (!key.empty()) key += ' ';
        key += toks[i].lower;
        total += score[index.at(toks[i].lower)];
      }
      phrases[key] = total;
    }
  }
  return phrases;
}

CompressionCandidate rerank(std::vector<CompressionCandidate>& candidates, const std::map<std::string, double>& phrases) {
  if (candidates.empty()) throw std::invalid_argument("rerank: no candidates");
  std::vector<std::pair<std::vector<std::string>, double>> split;
  for (const auto& [k, v] : phrases) split.emplace_back(split_phrase(k), v);
  for (auto& c : candidates) {
    double bonus = 0.0;
    for (const auto& [words, score] : split) {
      if (contains_phrase(c.words, words)) bonus += score;
    }
    c.rerank_score = c.raw_weight / (static_cast<double>(c.length) * (1.0 + bonus));
  }
  return *std::min_element(candidates.begin(), candidates.end(), candidate_less);
}

std::string realize(std::span<const std::string> tokens) {
  std::string out;
  bool glue_next = false;
  bool open_quote = false;
  for (const auto& t : tokens) {
    bool glue = out.empty() || glue_next || attaches_left(t);
    glue_next = false;
    if (t == "\"") {
      // straight quotes alternate between opening and closing
      glue = out.empty() || open_quote;
      glue_next = !open_quote;
      open_quote = !open_quote;
    } else if (attaches_right(t)) {
      glue_next = true;
    }
    if (!glue) out += ' ';
    out += t;
  }
  if (!out.empty()) {
    auto it = std::find_if(out.begin(), out.end(), [](unsigned char ch) { return std::isalpha(ch) != 0; });
    if (it != out.end() && std::islower(static_cast<unsigned char>(*it)) &&
        std::all_of(out.begin(), it, [](unsigned char ch) { return ch < 0x80 && std::ispunct(ch); })) {
      *it = static_cast<char>(std::toupper(static_cast<unsigned char>(*it)));
    }
  }
  return out;
}

std::size_t centroid_sentence(std::span<const Sentence> sentences, const WordVectorStore& vectors) {
  if (sentences.empty()) throw std::invalid_argument("centroid_sentence: no sentences");
  std::vector<std::vector<double>> emb;
  for (const auto& s : sentences) emb.push_back(sentence_embedding(s, vectors));
  std::size_t best = 0;
  double best_mean = -2.0;
  for (std::size_t i = 0; i < emb.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < emb.size(); ++j) {
      if (j != i) sum += cosine(emb[i], emb[j]);
    }
    double mean = emb.size() > 1 ? sum / static_cast<double>(emb.size() - 1) : 0.0;
    if (mean > best_mean) {
      best_mean = mean;
      best = i;
    }
  }
  return best;
}

CompressionResult compress_cluster_detailed(std::span<const Sentence> sentences, const Resources& resources,
                                            const CompressConfig& config) {
  if (sentences.empty()) throw std::invalid_argument("compress_cluster: no sentences");
  CompressionResult result;
  if (sentences.size() > 1) {
    auto graph = build_word_graph(sentences, resources.pos);
    auto candidates = k_shortest_paths(graph, config.k_paths, config.min_words);
    if (!candidates.empty()) {
      auto best = rerank(candidates, keyphrase_scores(sentences, resources.pos));
      result.text = realize(best.surfaces);
      result.words = std::move(best.words);
      return result;
    }
  }
  const auto& s = sentences[centroid_sentence(sentences, resources.vectors)];
  result.fallback = true;
  result.text = s.text;
  for (const auto& t : s.tokens) result.words.push_back(t.lower);
  return result;
}

std::string compress_cluster(std::span<const Sentence> sentences, const Resources& resources,
                             const CompressConfig& config) {
  return compress_cluster_detailed(sentences, resources, config).text;
}

std::string Summary::text() const {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

Summary assemble_summary(const ClusterAssignment& assignment, std::span<const Sentence> sentences,
                         const Resources& resources, const CompressConfig& config) {
  if (assignment.labels.size() != sentences.size()) {
    throw std::invalid_argument("assemble_summary: assignment does not cover the sentences");
  }
  std::map<std::size_t, std::vector<Sentence>> groups;
  for (std::size_t i = 0; i < sentences.size(); ++i) groups[assignment.labels[i]].push_back(sentences[i]);

  std::vector<std::pair<std::size_t, std::size_t>> order;  // (min global index, label)
  for (auto& [label, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const Sentence& a, const Sentence& b) { return a.global_index < b.global_index; });
    order.emplace_back(members.front().global_index, label);
  }
  std::sort(order.begin(), order.end());

  Summary summary;
  for (const auto& [first, label] : order) {
    auto result = compress_cluster_detailed(groups.at(label), resources, config);
    if (std::find(summary.sentences.begin(), summary.sentences.end(), result.text) != summary.sentences.end()) continue;
    summary.sentences.push_back(result.text);
    summary.source_cluster_ids.push_back(label);
    summary.details.push_back(std::move(result));
  }
  return summary;
}

}  // namespace summpip
