#include "summpip/rouge.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "summpip/porter_stemmer.hpp"

namespace summpip {

namespace {

constexpr std::size_t kMaxSkip = 4;

using Counts = std::map<std::string, std::size_t>;

Counts ngrams(const std::vector<std::string>& toks, std::size_t n) {
  Counts out;
  if (toks.size() < n) return out;
  for (std::size_t i = 0; i + n <= toks.size(); ++i) {
    std::string key = toks[i];
    for (std::size_t j = 1; j < n; ++j) key += ' ' + toks[i + j];
    ++out[key];
  }
  return out;
}

Counts su_units(const std::vector<std::string>& toks) {
  Counts out = ngrams(toks, 1);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    for (std::size_t j = i + 1; j < toks.size() && j - i <= kMaxSkip + 1; ++j) ++out[toks[i] + '\t' + toks[j]];
  }
  return out;
}

RougeScore score(const Counts& cand, const Counts& ref) {
  std::size_t overlap = 0, c_total = 0, r_total = 0;
  for (const auto& [k, v] : cand) c_total += v;
  for (const auto& [k, v] : ref) {
    r_total += v;
    if (auto it = cand.find(k); it != cand.end()) overlap += std::min(v, it->second);
  }
  RougeScore s;
  if (c_total > 0) s.precision = static_cast<double>(overlap) / static_cast<double>(c_total);
  if (r_total > 0) s.recall = static_cast<double>(overlap) / static_cast<double>(r_total);
  if (s.precision + s.recall > 0.0) s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

void accumulate(RougeScore& sum, const RougeScore& x) {
  sum.precision += x.precision;
  sum.recall += x.recall;
  sum.f1 += x.f1;
}

void divide(RougeScore& s, double n) {
  s.precision /= n;
  s.recall /= n;
  s.f1 /= n;
}

}  // namespace

std::vector<std::string> rouge_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    out.push_back(cur.size() > 3 ? porter_stem(cur) : cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch >= 'A' && ch <= 'Z') cur += static_cast<char>(ch - 'A' + 'a');
    else if ((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9')) cur += ch;
    else flush();
  }
  flush();
  return out;
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, std::size_t n) {
  if (n < 1) throw std::invalid_argument("rouge_n: n must be positive");
  return score(ngrams(rouge_tokens(candidate), n), ngrams(rouge_tokens(reference), n));
}

RougeScore rouge_su4(std::string_view candidate, std::string_view reference) {
  return score(su_units(rouge_tokens(candidate)), su_units(rouge_tokens(reference)));
}

CorpusReport evaluate_corpus(const std::vector<std::string>& candidates, const std::vector<std::string>& references) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("evaluate_corpus: " + std::to_string(candidates.size()) + " candidates vs " +
                                std::to_string(references.size()) + " references");
  }
  CorpusReport report;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    InstanceScores s{rouge_n(candidates[i], references[i], 1), rouge_n(candidates[i], references[i], 2),
                     rouge_su4(candidates[i], references[i])};
    accumulate(report.macro.rouge1, s.rouge1);
    accumulate(report.macro.rouge2, s.rouge2);
    accumulate(report.macro.rougesu4, s.rougesu4);
    report.instances.push_back(s);
  }
  if (!candidates.empty()) {
    auto n = static_cast<double>(candidates.size());
    divide(report.macro.rouge1, n);
    divide(report.macro.rouge2, n);
    divide(report.macro.rougesu4, n);
  }
  return report;
}

std::string format_report(const CorpusReport& report) {
  const std::pair<const char*, const RougeScore*> rows[] = {
      {"ROUGE-1", &report.macro.rouge1}, {"ROUGE-2", &report.macro.rouge2}, {"ROUGE-SU4", &report.macro.rougesu4}};
  const char* keys[] = {"rouge1", "rouge2", "rougesu4"};
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s\n", "metric", "precision", "recall", "f1");
  out += buf;
  for (const auto& [name, s] : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %10.4f %10.4f %10.4f\n", name, s->precision, s->recall, s->f1);
    out += buf;
  }
  out += "\ninstances=" + std::to_string(report.instances.size()) + '\n';
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& s = *rows[i].second;
    std::snprintf(buf, sizeof buf, "%s_p=%.4f\n%s_r=%.4f\n%s_f=%.4f\n", keys[i], s.precision, keys[i], s.recall,
                  keys[i], s.f1);
    out += buf;
  }
  return out;
}

}  // namespace summpip
