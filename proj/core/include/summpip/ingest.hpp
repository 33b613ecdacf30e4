#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "summpip/text.hpp"

namespace summpip {

inline constexpr std::string_view kDefaultDocSeparator = "story_separator_special_tag";

struct Token {
  std::string surface;
  std::string lower;
  bool is_stopword = false;
  bool is_punct = false;
};

struct Sentence {
  std::vector<Token> tokens;
  std::string text;  // original sentence text, trimmed
  std::size_t doc_index = 0;
  std::size_t sent_index = 0;
  std::size_t global_index = 0;
};

// One summarization instance. `sentences` is empty until segment_cluster runs;
// token_budget is "unbounded" until truncate_cluster runs.
struct DocumentCluster {
  std::string id;
  std::vector<std::string> documents;
  std::vector<Sentence> sentences;
  std::size_t token_budget = std::numeric_limits<std::size_t>::max();

  std::size_t token_count() const;
};

/// One cluster per non-empty line; documents split on `separator`. Literal
/// "NEWLINE_CHAR" markers (Multi-News distribution) are treated as whitespace
/// and empty documents are dropped. Throws IoError / std::invalid_argument.
std::vector<DocumentCluster> load_cluster_file(const std::filesystem::path& path,
                                               std::string_view separator = kDefaultDocSeparator);

/// Splits a line of text into documents; used by load_cluster_file.
std::vector<std::string> split_documents(std::string_view line, std::string_view separator);

/// Rule-based sentence splitter.
///
/// A run of terminators (. ! ?) plus any closing quotes or brackets ends a
/// sentence when followed by whitespace or end of text, unless
///   - the run is a single '.' closing a known abbreviation ("Mr.", "U.S."),
///   - the run is a single '.' after a one-letter initial ("J."),
///   - the next word starts with a lowercase letter.
/// Decimal numbers never split because the '.' is not followed by whitespace.
std::vector<std::string> split_sentences(std::string_view document, const WordSet& abbreviations);

/// Whitespace tokenizer with punctuation peeling. Leading opening quotes and
/// brackets and trailing closing punctuation become separate tokens; a final
/// '.' stays attached for abbreviations, initials and dotted acronyms.
/// English clitics ('s, n't, 're, 've, 'll, 'd, 'm) are split off.
std::vector<Token> tokenize(std::string_view sentence_text, const WordSet& stopwords,
                            const WordSet& abbreviations = {});

/// Fills `cluster.sentences` from `cluster.documents` with consecutive global indices.
void segment_cluster(DocumentCluster& cluster, const WordSet& stopwords, const WordSet& abbreviations);

/// Keeps the longest sentence prefix whose token count fits `budget`, always
/// keeping at least the first sentence. Requires budget > 0.
DocumentCluster truncate_cluster(const DocumentCluster& cluster, std::size_t budget);

}  // namespace summpip
