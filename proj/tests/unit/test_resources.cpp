#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "summpip/errors.hpp"
#include "summpip/resources.hpp"

using namespace summpip;
using summpip::testing::make_sentence;
using summpip::testing::shipped_resources;
using summpip::testing::TempDir;
using summpip::testing::write_file;

namespace {

WordVectorStore small_store() {
  WordVectorStore s(2);
  s.add("a", {1, 0});
  s.add("b", {0, 1});
  s.add("c", {1, 1});
  return s;
}

Sentence sentence_of(std::initializer_list<const char*> words) {
  Sentence s;
  for (const char* w : words) s.tokens.push_back(Token{w, to_lower(w), false, is_punctuation(w)});
  return s;
}

}  // namespace

TEST(Vectors, LoadRoundTrip) {
  TempDir dir;
  write_file(dir / "v.txt", "2 3\na 1 0 0\nb 0 1 0\n");
  auto store = load_vectors(dir / "v.txt");
  EXPECT_EQ(store.dimension(), 3u);
  EXPECT_EQ(store.size(), 2u);
  ASSERT_NE(store.find("A"), nullptr);
  EXPECT_EQ((*store.find("b"))[1], 1.0);
  EXPECT_EQ(store.find("zzz"), nullptr);
}

TEST(Vectors, ShortRowIsFormatErrorAtThatLine) {
  TempDir dir;
  write_file(dir / "v.txt", "2 3\na 1 0 0\nb 0 1\n");
  try {
    load_vectors(dir / "v.txt");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Vectors, DuplicateKeepsFirst) {
  TempDir dir;
  write_file(dir / "v.txt", "2 2\na 1 0\na 0 1\n");
  auto store = load_vectors(dir / "v.txt");
  EXPECT_EQ(store.size(), 1u);
  EXPECT_EQ((*store.find("a"))[0], 1.0);
}

TEST(Vectors, MissingFileAndBadHeader) {
  EXPECT_THROW(load_vectors("/nonexistent/vectors.txt"), IoError);
  TempDir dir;
  write_file(dir / "v.txt", "two three\n");
  EXPECT_THROW(load_vectors(dir / "v.txt"), FormatError);
}

TEST(Embedding, MeanOfInVocabularyTokens) {
  auto store = small_store();
  auto e = sentence_embedding(sentence_of({"a", "b"}), store);
  EXPECT_DOUBLE_EQ(e[0], 0.5);
  EXPECT_DOUBLE_EQ(e[1], 0.5);

  auto zero = sentence_embedding(sentence_of({"x", "y"}), store);
  EXPECT_EQ(zero, (std::vector<double>{0.0, 0.0}));

  WordVectorStore s2(2);
  s2.add("k", {2, 4});
  auto single = sentence_embedding(sentence_of({"q", "K", "r", "."}), s2);
  EXPECT_EQ(single, (std::vector<double>{2.0, 4.0}));
}

TEST(Embedding, PermutationInvariant) {
  auto store = small_store();
  auto e1 = sentence_embedding(sentence_of({"a", "c", "b", "c"}), store);
  auto e2 = sentence_embedding(sentence_of({"c", "b", "c", "a"}), store);
  EXPECT_DOUBLE_EQ(e1[0], e2[0]);
  EXPECT_DOUBLE_EQ(e1[1], e2[1]);
}

TEST(Cosine, AnalyticCases) {
  std::vector<double> x{1, 0}, y{0, 1}, d{1, 1}, z{0, 0};
  EXPECT_DOUBLE_EQ(cosine(x, x), 1.0);
  EXPECT_DOUBLE_EQ(cosine(x, y), 0.0);
  EXPECT_NEAR(cosine(d, x), std::sqrt(2.0) / 2.0, 1e-12);
  EXPECT_EQ(cosine(z, x), 0.0);
  std::vector<double> three{1, 2, 3};
  EXPECT_THROW(cosine(x, three), std::invalid_argument);
}

TEST(Cosine, SelfOneAndSymmetric) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> u(7), v(7);
    for (auto& x : u) x = g(rng);
    for (auto& x : v) x = g(rng);
    EXPECT_NEAR(cosine(u, u), 1.0, 1e-12);
    EXPECT_EQ(cosine(u, v), cosine(v, u));
  }
}

TEST(Nearest, CappedByVocabularyAndExcludesQuery) {
  auto store = small_store();
  auto n = nearest_words("a", store, 10);
  EXPECT_EQ(n, (std::vector<std::string>{"c", "b"}));
  EXPECT_TRUE(nearest_words("nothere", store, 10).empty());
  EXPECT_TRUE(nearest_words("a", store, 0).empty());
}

TEST(Nearest, NoDuplicatesOnRealVectors) {
  const auto& store = shipped_resources().vectors;
  auto n = nearest_words("storm", store, 10);
  EXPECT_EQ(n.size(), 10u);
  EXPECT_EQ(std::find(n.begin(), n.end(), "storm"), n.end());
  auto sorted = n;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
}

TEST(Deverbal, LexiconPlusNeighbours) {
  WordVectorStore store(2);
  store.add("destruction", {1, 0});
  store.add("ruin", {0.9, 0.1});
  store.add("banana", {0, 1});
  DeverbalLexicon lex(std::map<std::string, std::set<std::string>>{{"destroy", {"destruction"}}});
  auto set0 = deverbal_nouns("destroy", lex, store, 0);
  EXPECT_EQ(set0, (std::set<std::string>{"destruction"}));
  auto set1 = deverbal_nouns("destroy", lex, store, 1);
  EXPECT_EQ(set1, (std::set<std::string>{"destruction", "ruin"}));
  EXPECT_TRUE(deverbal_nouns("eat", lex, store, 10).empty());
}

TEST(Deverbal, MonotoneInNeighbourCount) {
  const auto& r = shipped_resources();
  std::set<std::string> prev;
  for (std::size_t n = 0; n <= 12; ++n) {
    auto cur = deverbal_nouns("destroy", r.deverbal, r.vectors, n);
    EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) << "n=" << n;
    prev = std::move(cur);
  }
  EXPECT_TRUE(prev.count("destruction"));
}

TEST(VerbLexicon, Lemmatize) {
  const auto& v = shipped_resources().verbs;
  EXPECT_EQ(v.lemmatize("destroyed"), "destroy");
  EXPECT_EQ(v.lemmatize("stopping"), "stop");
  EXPECT_EQ(v.lemmatize("arrested"), "arrest");
  EXPECT_EQ(v.lemmatize("said"), "say");
  EXPECT_EQ(v.lemmatize("hopes"), "hope");
  EXPECT_EQ(v.lemmatize("carried"), "carry");
  EXPECT_FALSE(v.lemmatize("qwzx").has_value());
}

TEST(PosLexicon, TagsAndDefault) {
  const auto& p = shipped_resources().pos;
  EXPECT_EQ(p.tag("destroyed"), CoarsePos::kVerb);
  EXPECT_EQ(p.tag("storm"), CoarsePos::kNoun);
  EXPECT_EQ(p.tag("big"), CoarsePos::kAdj);
  EXPECT_EQ(p.tag("the"), CoarsePos::kOther);
  EXPECT_EQ(p.tag("zorblaxian"), CoarsePos::kNoun);
  EXPECT_EQ(p.tag(Token{",", ",", false, true}), CoarsePos::kPunct);
}

TEST(Markers, ShippedListHas39Entries) {
  EXPECT_EQ(shipped_resources().markers.size(), 39u);
}

TEST(Markers, SingleAndMultiWord) {
  const auto& m = shipped_resources().markers;
  EXPECT_TRUE(m.starts_with_marker(make_sentence("However, it rained.").tokens));
  EXPECT_TRUE(m.starts_with_marker(make_sentence("\"Meanwhile the river rose.").tokens));
  EXPECT_TRUE(m.starts_with_marker(make_sentence("As a result, rivers rose.").tokens));
  EXPECT_TRUE(m.starts_with_marker(make_sentence("On the other hand, it helped.").tokens));
  EXPECT_FALSE(m.starts_with_marker(make_sentence("As the result came in, they left.").tokens));
  EXPECT_FALSE(m.starts_with_marker(make_sentence("The river rose.").tokens));
  EXPECT_FALSE(m.starts_with_marker(std::vector<Token>{}));
}

TEST(Entities, GazetteerHit) {
  Gazetteer g({{"google", EntityType::kOrg}});
  auto m = detect_entities(make_sentence("Shares rose at Google today."), g);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].surface, "Google");
  EXPECT_EQ(m[0].type, EntityType::kOrg);
}

TEST(Entities, SentenceInitialCapitalIgnored) {
  Gazetteer g;
  EXPECT_TRUE(detect_entities(make_sentence("The river rose."), g).empty());
}

TEST(Entities, CapitalizedRunIsOther) {
  Gazetteer g;
  auto m = detect_entities(make_sentence("Yesterday John Smith left."), g);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].surface, "John Smith");
  EXPECT_EQ(m[0].type, EntityType::kOther);
  EXPECT_EQ(m[0].first_token, 1u);
  EXPECT_EQ(m[0].token_count, 2u);
}

TEST(Entities, LowercaseGazetteerWordIsNotAnEntity) {
  const auto& r = shipped_resources();
  auto m = detect_entities(make_sentence("they said the kindle was lit in paris ."), r.gazetteer);
  EXPECT_TRUE(m.empty());
}

TEST(Entities, MultiWordGazetteerEntry) {
  const auto& r = shipped_resources();
  auto m = detect_entities(make_sentence("A report by the Associated Press said so."), r.gazetteer);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].surface, "Associated Press");
  EXPECT_EQ(m[0].type, EntityType::kOrg);
}

TEST(Resources, MissingFileReportedBeforeLoading) {
  auto paths = summpip::testing::shipped_paths();
  paths.gazetteer = "/nonexistent/gazetteer.tsv";
  try {
    load_resources(paths);
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("gazetteer"), std::string::npos);
  }
}

TEST(Resources, ShippedFilesLoad) {
  const auto& r = shipped_resources();
  EXPECT_GT(r.stopwords.size(), 100u);
  EXPECT_GT(r.abbreviations.size(), 50u);
  EXPECT_GT(r.deverbal.size(), 1000u);
  EXPECT_GT(r.gazetteer.size(), 100u);
  EXPECT_GT(r.verbs.size(), 1000u);
  EXPECT_GT(r.pos.size(), 10000u);
  EXPECT_GT(r.vectors.size(), 100u);
}
