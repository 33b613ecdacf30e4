#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace summpip {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Lowercases, splits on anything that is not an ASCII letter or digit and
/// Porter-stems tokens longer than three characters.
std::vector<std::string> rouge_tokens(std::string_view text);

/// Clipped n-gram overlap. Requires n >= 1.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n);

/// Skip-bigrams with at most four words in between, plus unigrams.
RougeScore rouge_su4(std::string_view candidate, std::string_view reference);

struct InstanceScores {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougesu4;
};

struct CorpusReport {
  std::vector<InstanceScores> instances;
  InstanceScores macro;  // arithmetic means over instances
};

/// Throws std::invalid_argument when the lists differ in length.
CorpusReport evaluate_corpus(const std::vector<std::string>& candidates, const std::vector<std::string>& references);

/// Fixed-width table followed by key=value lines, four decimals each.
std::string format_report(const CorpusReport& report);

}  // namespace summpip
