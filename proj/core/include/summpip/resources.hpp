#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "summpip/ingest.hpp"
#include "summpip/text.hpp"

namespace summpip {

// ---------------------------------------------------------------------------
// Word vectors
// ---------------------------------------------------------------------------

/// Dense word embeddings keyed by case-folded word. Immutable after loading.
class WordVectorStore {
 public:
  WordVectorStore() = default;
  explicit WordVectorStore(std::size_t dimension) : dimension_(dimension) {}

  /// Inserts `word` unless already present (first occurrence wins).
  /// Throws std::invalid_argument on dimension mismatch.
  bool add(std::string_view word, std::vector<double> vector);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return words_.size(); }

  /// Case-folded lookup; nullptr when out of vocabulary.
  const std::vector<double>* find(std::string_view word) const;

  const std::vector<std::string>& words() const noexcept { return words_; }
  std::span<const double> vector_at(std::size_t row) const { return rows_[row]; }
  double norm_at(std::size_t row) const { return norms_[row]; }

 private:
  std::size_t dimension_ = 0;
  std::vector<std::string> words_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Reads word2vec text format: header "count dim", then "word v1 ... vdim".
/// Throws IoError, or FormatError naming the offending line.
WordVectorStore load_vectors(const std::filesystem::path& path);

/// Mean of the vectors of in-vocabulary, non-punctuation tokens; zero vector if none.
std::vector<double> sentence_embedding(const Sentence& sentence, const WordVectorStore& store);

/// dot(u,v) / (|u||v|), 0 when either norm is 0. Throws std::invalid_argument
/// on dimension mismatch.
double cosine(std::span<const double> u, std::span<const double> v);

/// The `n` words closest to `word` by cosine, excluding the word itself. Ties
/// resolve lexicographically. Exact brute force over the vocabulary.
std::vector<std::string> nearest_words(std::string_view word, const WordVectorStore& store, std::size_t n);

// ---------------------------------------------------------------------------
// Lexicons
// ---------------------------------------------------------------------------

enum class CoarsePos { kVerb, kNoun, kAdj, kOther, kPunct };

std::string_view to_string(CoarsePos pos);

/// Verb lemmas plus irregular inflections; lemmatizes by suffix stripping.
class VerbLexicon {
 public:
  VerbLexicon() = default;
  VerbLexicon(WordSet lemmas, std::unordered_map<std::string, std::string> irregular)
      : lemmas_(std::move(lemmas)), irregular_(std::move(irregular)) {}

  bool contains_lemma(std::string_view lemma) const { return lemmas_.count(std::string(lemma)) > 0; }

  /// Maps an inflected form ("destroyed", "stopping", "said") to its lemma.
  /// Tries the irregular table, the form itself, then -s/-es/-ies/-ed/-ing
  /// stripping with e-restoration and consonant undoubling.
  std::optional<std::string> lemmatize(std::string_view lower) const;

  std::size_t size() const noexcept { return lemmas_.size(); }

 private:
  WordSet lemmas_;
  std::unordered_map<std::string, std::string> irregular_;
};

/// Lines are either "lemma" or "form<TAB>lemma".
VerbLexicon load_verb_lexicon(const std::filesystem::path& path);

/// Coarse part-of-speech tags by surface form.
class PosLexicon {
 public:
  PosLexicon() = default;
  explicit PosLexicon(std::unordered_map<std::string, CoarsePos> tags) : tags_(std::move(tags)) {}

  /// Exact lookup, then the tag of a suffix-stripped base form; unknown words are NOUN.
  CoarsePos tag(std::string_view lower) const;
  CoarsePos tag(const Token& token) const { return token.is_punct ? CoarsePos::kPunct : tag(token.lower); }

  std::size_t size() const noexcept { return tags_.size(); }

 private:
  std::unordered_map<std::string, CoarsePos> tags_;
};

/// Lines "word<TAB>VERB|NOUN|ADJ|OTHER". Throws FormatError on a bad tag.
PosLexicon load_pos_lexicon(const std::filesystem::path& path);

/// verb lemma -> noun forms, every set non-empty.
class DeverbalLexicon {
 public:
  DeverbalLexicon() = default;
  explicit DeverbalLexicon(std::map<std::string, std::set<std::string>> entries);

  const std::set<std::string>* find(std::string_view verb) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::string, std::set<std::string>, std::less<>> entries_;
};

/// Lines "verb<TAB>noun1,noun2".
DeverbalLexicon load_deverbal_lexicon(const std::filesystem::path& path);

/// Lexicon nouns of `verb` plus, for each noun, its `n` nearest embedding
/// neighbours. Unknown verb -> empty set.
std::set<std::string> deverbal_nouns(std::string_view verb, const DeverbalLexicon& lexicon,
                                     const WordVectorStore& store, std::size_t n);

// ---------------------------------------------------------------------------
// Discourse markers
// ---------------------------------------------------------------------------

class MarkerList {
 public:
  MarkerList() = default;
  explicit MarkerList(std::vector<std::string> markers);

  const std::vector<std::string>& markers() const noexcept { return markers_; }
  std::size_t size() const noexcept { return markers_.size(); }

  /// True when the leading non-punctuation tokens of `tokens` spell a marker.
  bool starts_with_marker(std::span<const Token> tokens) const;

 private:
  std::vector<std::string> markers_;
  std::vector<std::vector<std::string>> split_;
};

MarkerList load_markers(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Entities
// ---------------------------------------------------------------------------

enum class EntityType { kOrg, kPerson, kProduct, kLocation, kOther };

std::string_view to_string(EntityType type);
std::optional<EntityType> parse_entity_type(std::string_view name);

struct EntityMention {
  std::string surface;
  EntityType type = EntityType::kOther;
  std::size_t sentence_index = 0;
  std::size_t first_token = 0;
  std::size_t token_count = 0;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

/// Case-folded phrase -> type. Phrases are stored tokenized so multi-word
/// entries match token sequences.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(const std::map<std::string, EntityType>& phrases);

  /// Longest entry matching tokens starting at `pos`: (token count, type).
  std::optional<std::pair<std::size_t, EntityType>> longest_match(std::span<const Token> tokens,
                                                                   std::size_t pos) const;
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<std::vector<std::string>, EntityType> entries_;
  std::size_t max_tokens_ = 0;
};

/// Lines "phrase<TAB>TYPE".
Gazetteer load_gazetteer(const std::filesystem::path& path);

/// Gazetteer hits (longest match, first token capitalized) plus runs of
/// capitalized non-stopword tokens typed OTHER. The sentence-initial word
/// never starts a capitalization run. Mentions never overlap.
std::vector<EntityMention> detect_entities(const Sentence& sentence, const Gazetteer& gazetteer);

// ---------------------------------------------------------------------------
// Bundle
// ---------------------------------------------------------------------------

struct ResourcePaths {
  std::filesystem::path vectors;
  std::filesystem::path stopwords;
  std::filesystem::path abbreviations;
  std::filesystem::path markers;
  std::filesystem::path deverbal;
  std::filesystem::path gazetteer;
  std::filesystem::path verbs;
  std::filesystem::path pos_lexicon;

  /// Every path resolved against `data_dir` using the shipped file names;
  /// `vectors` is left empty.
  static ResourcePaths in_directory(const std::filesystem::path& data_dir);
};

/// Everything the graph builder and compressor read. Immutable once loaded;
/// share one instance across worker threads.
struct Resources {
  WordSet stopwords;
  WordSet abbreviations;
  WordVectorStore vectors;
  MarkerList markers;
  DeverbalLexicon deverbal;
  Gazetteer gazetteer;
  VerbLexicon verbs;
  PosLexicon pos;
};

/// Checks that every file exists before reading any of them, then loads all.
/// Throws IoError naming the first missing file.
Resources load_resources(const ResourcePaths& paths);

}  // namespace summpip
