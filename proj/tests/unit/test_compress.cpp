#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "summpip/compress.hpp"

using namespace summpip;
using summpip::testing::make_sentence;
using summpip::testing::shipped_resources;

namespace {

std::vector<Sentence> sents(std::initializer_list<const char*> texts) {
  std::vector<Sentence> out;
  std::size_t i = 0;
  for (const char* t : texts) out.push_back(make_sentence(t, i, 0, i)), ++i;
  return out;
}

CompressionCandidate candidate(std::vector<std::string> words, double raw) {
  CompressionCandidate c;
  c.words = std::move(words);
  c.surfaces = c.words;
  c.length = c.words.size();
  c.raw_weight = raw;
  c.total_weight = raw * static_cast<double>(c.length);
  return c;
}

}  // namespace

TEST(KShortestPaths, ChainGivesOneCandidate) {
  auto s = sents({"storms destroyed coastal homes near Tampa yesterday"});
  auto g = build_word_graph(s, shipped_resources().pos);
  auto c = k_shortest_paths(g, 100, 5);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].words.size(), 7u);
  EXPECT_EQ(c[0].words[1], "destroyed");
  EXPECT_DOUBLE_EQ(c[0].raw_weight, c[0].total_weight / 7.0);
}

TEST(KShortestPaths, ShortPathsFiltered) {
  auto s = sents({"storms hit Tampa", "storms hit Miami"});
  auto g = build_word_graph(s, shipped_resources().pos);
  EXPECT_TRUE(k_shortest_paths(g, 100, 5).empty());
  EXPECT_FALSE(k_shortest_paths(g, 100, 3).empty());
}

TEST(KShortestPaths, VerbRequired) {
  auto s = sents({"the big red storm near the coast"});
  auto g = build_word_graph(s, shipped_resources().pos);
  EXPECT_TRUE(k_shortest_paths(g, 100, 2).empty());
}

TEST(KShortestPaths, PunctuationDoesNotCount) {
  auto s = sents({"storms hit Tampa , Miami ."});
  auto g = build_word_graph(s, shipped_resources().pos);
  EXPECT_EQ(k_shortest_paths(g, 100, 4).size(), 1u);
  EXPECT_TRUE(k_shortest_paths(g, 100, 5).empty());
}

TEST(KShortestPaths, Contracts) {
  WordGraph g;
  EXPECT_THROW(k_shortest_paths(g, 0, 5), std::invalid_argument);
  EXPECT_THROW(k_shortest_paths(g, 5, 0), std::invalid_argument);
}

TEST(Keyphrases, Empty) { EXPECT_TRUE(keyphrase_scores({}, shipped_resources().pos).empty()); }

TEST(Keyphrases, AdjacentPairScoresOneEach) {
  // two linked words: s = 0.15 + 0.85 * s_other, fixed point 1.0 each
  auto s = sents({"big storms hit"});
  auto k = keyphrase_scores(s, shipped_resources().pos);
  ASSERT_EQ(k.size(), 1u);
  ASSERT_TRUE(k.count("big storms"));
  EXPECT_NEAR(k.at("big storms"), 2.0, 1e-9);
}

TEST(Keyphrases, IsolatedWordsSymmetric) {
  auto s = sents({"storms hit coasts"});
  auto k = keyphrase_scores(s, shipped_resources().pos);
  ASSERT_EQ(k.size(), 2u);
  EXPECT_DOUBLE_EQ(k.at("storms"), k.at("coasts"));
  EXPECT_NEAR(k.at("storms"), 0.15, 1e-12);
}

TEST(Keyphrases, HubWordScoresHigher) {
  // star graph: "storm" linked to three leaves
  auto s = sents({"coastal storm damage", "winter storm season", "storm"});
  auto k = keyphrase_scores(s, shipped_resources().pos);
  EXPECT_GT(k.at("storm"), 1.0);
  for (const auto& [phrase, score] : k) EXPECT_GT(score, 0.0);
  // hand-solved star with 1 hub and 4 leaves: h = 0.15 + 0.85 * 4 * l, l = 0.15 + 0.85 * h / 4
  const double h = (0.15 + 0.85 * 4 * 0.15) / (1 - 0.85 * 0.85);
  EXPECT_NEAR(k.at("storm"), h, 1e-5);
}

TEST(Rerank, KeyphraseWins) {
  std::vector<CompressionCandidate> c{candidate({"rain", "hit", "the", "town"}, 1.0),
                                      candidate({"big", "storms", "hit", "town"}, 1.0)};
  auto best = rerank(c, {{"big storms", 2.0}});
  EXPECT_EQ(best.words[0], "big");
  EXPECT_DOUBLE_EQ(c[0].rerank_score, 1.0 / 4.0);
  EXPECT_DOUBLE_EQ(c[1].rerank_score, 1.0 / (4.0 * 3.0));
}

TEST(Rerank, SingleAndNoPhrases) {
  std::vector<CompressionCandidate> one{candidate({"a", "b"}, 0.7)};
  EXPECT_EQ(rerank(one, {}).words, one[0].words);
  std::vector<CompressionCandidate> c{candidate({"a", "b", "c"}, 0.9), candidate({"d", "e"}, 0.5),
                                      candidate({"f", "g", "h", "i"}, 0.8)};
  auto best = rerank(c, {});
  EXPECT_EQ(best.words, (std::vector<std::string>{"f", "g", "h", "i"}));  // 0.8/4 = 0.2 is smallest
  std::vector<CompressionCandidate> none;
  EXPECT_THROW(rerank(none, {}), std::invalid_argument);
}

TEST(Rerank, TiesShorterThenLexicographic) {
  std::vector<CompressionCandidate> c{candidate({"b", "x"}, 1.0), candidate({"a", "x"}, 1.0),
                                      candidate({"a", "b", "c", "d"}, 2.0)};
  EXPECT_EQ(rerank(c, {}).words, (std::vector<std::string>{"a", "x"}));
}

TEST(Rerank, ScaleInvariantArgmin) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  const char* pool[] = {"storm", "hit", "big", "coast", "town", "rain"};
  for (int t = 0; t < 100; ++t) {
    std::vector<CompressionCandidate> c;
    for (int i = 0; i < 6; ++i) {
      std::vector<std::string> w;
      for (std::size_t j = 0; j < 2 + rng() % 4; ++j) w.push_back(pool[rng() % 6]);
      c.push_back(candidate(w, u(rng)));
    }
    std::map<std::string, double> phrases{{"big storm", 2.0}, {"coast", 0.3}};
    auto best = rerank(c, phrases);
    auto scaled = c;
    for (auto& x : scaled) x.raw_weight *= 3.5;
    EXPECT_EQ(rerank(scaled, phrases).words, best.words);
  }
}

TEST(Realize, Detokenizes) {
  std::vector<std::string> t{"the", "storm", "(", "a", "big", "one", ")", "did", "n't", "stop", ",", "officials",
                             "'s", "said", "\"", "no", "\"", "."};
  EXPECT_EQ(realize(t), "The storm (a big one) didn't stop, officials's said \"no\".");
  EXPECT_EQ(realize(std::vector<std::string>{}), "");
  EXPECT_EQ(realize(std::vector<std::string>{"\"", "we", "won", "\""}), "\"We won\"");
}

TEST(CompressCluster, SingletonVerbatim) {
  auto s = sents({"Storms hit the coast of Florida on Monday."});
  auto r = compress_cluster_detailed(s, shipped_resources(), {});
  EXPECT_TRUE(r.fallback);
  EXPECT_EQ(r.text, "Storms hit the coast of Florida on Monday.");
}

TEST(CompressCluster, PoliceExample) {
  auto s = sents({"police arrested the suspect today", "the suspect was arrested by police"});
  auto r = compress_cluster_detailed(s, shipped_resources(), {});
  EXPECT_FALSE(r.fallback);
  for (const char* w : {"police", "arrested", "suspect"}) {
    EXPECT_NE(std::find(r.words.begin(), r.words.end(), w), r.words.end()) << w << " in " << r.text;
  }
}

TEST(CompressCluster, NoVerbsFallsBackToCentroid) {
  auto s = sents({"the big red storm near the coast", "a big red storm near the town", "red storm"});
  auto r = compress_cluster_detailed(s, shipped_resources(), {});
  EXPECT_TRUE(r.fallback);
  auto idx = centroid_sentence(s, shipped_resources().vectors);
  EXPECT_EQ(r.text, s[idx].text);
}

TEST(CompressCluster, CentroidTieGoesToLowestIndex) {
  auto s = sents({"zyx qwv", "qwv zyx", "zzz"});  // all out of vocabulary: every mean is 0
  EXPECT_EQ(centroid_sentence(s, shipped_resources().vectors), 0u);
}

TEST(CompressCluster, OutputsOnlySourceWords) {
  const auto& res = shipped_resources();
  for (const auto& line : read_lines(summpip::testing::test_data_dir() / "news_clusters.txt")) {
    DocumentCluster c;
    c.documents = split_documents(line, kDefaultDocSeparator);
    segment_cluster(c, res.stopwords, res.abbreviations);
    std::set<std::string> vocab;
    for (const auto& s : c.sentences) {
      for (const auto& t : s.tokens) vocab.insert(t.lower);
    }
    CompressConfig cfg;
    auto r = compress_cluster_detailed(c.sentences, res, cfg);
    ASSERT_FALSE(r.fallback);
    for (const auto& w : r.words) EXPECT_TRUE(vocab.count(w)) << w;
    EXPECT_FALSE(r.text.empty());
  }
}

TEST(AssembleSummary, OrdersByFirstSentence) {
  std::vector<Sentence> s;
  const char* texts[] = {"Rain fell in Tampa.", "Rain fell in Miami.", "Rain fell in Orlando.", "Rain fell in Naples.",
                         "Wind hit Dallas.", "Wind hit Austin.", "Wind hit Houston.", "Snow hit Denver.",
                         "Snow hit Boulder."};
  for (std::size_t i = 0; i < 9; ++i) s.push_back(make_sentence(texts[i], 0, i, i));
  ClusterAssignment a;
  a.k = 3;
  a.labels = {1, 1, 1, 1, 0, 0, 0, 2, 2};
  auto sum = assemble_summary(a, s, shipped_resources(), {});
  EXPECT_EQ(sum.source_cluster_ids, (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(sum.sentences.size(), 3u);
}

TEST(AssembleSummary, EmptyClustersSkipped) {
  std::vector<Sentence> s;
  for (std::size_t i = 0; i < 7; ++i) s.push_back(make_sentence("Sentence number " + std::to_string(i) + " ran.", 0, i, i));
  ClusterAssignment a;
  a.k = 9;
  a.labels = {0, 2, 3, 4, 5, 7, 8};
  auto sum = assemble_summary(a, s, shipped_resources(), {});
  EXPECT_EQ(sum.sentences.size(), 7u);
}

TEST(AssembleSummary, DuplicatesDropped) {
  std::vector<Sentence> s{make_sentence("Storms hit.", 0, 0, 0), make_sentence("Storms hit.", 1, 0, 1)};
  ClusterAssignment a;
  a.k = 2;
  a.labels = {0, 1};
  auto sum = assemble_summary(a, s, shipped_resources(), {});
  ASSERT_EQ(sum.sentences.size(), 1u);
  EXPECT_EQ(sum.source_cluster_ids[0], 0u);
  EXPECT_EQ(sum.text(), "Storms hit.");
}

TEST(AssembleSummary, AssignmentMustCoverSentences) {
  std::vector<Sentence> s{make_sentence("Storms hit.")};
  ClusterAssignment a;
  EXPECT_THROW(assemble_summary(a, s, shipped_resources(), {}), std::invalid_argument);
}
