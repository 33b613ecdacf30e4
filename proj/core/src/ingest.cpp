#include "summpip/ingest.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace summpip {

namespace {

constexpr std::array<std::string_view, 11> kOpening = {"\"", "'", "(", "[", "{", "`", "$", "#",
                                                       "\xE2\x80\x9C", "\xE2\x80\x98", "\xC2\xAB"};
constexpr std::array<std::string_view, 15> kClosing = {
    "\"", "'", ")", "]", "}", ",", ";", ":", "!", "?", "%", "\xE2\x80\x9D", "\xE2\x80\x99", "\xC2\xBB",
    "\xE2\x80\xA6"};
constexpr std::array<std::string_view, 7> kClitics = {"n't", "'s", "'re", "'ve", "'ll", "'d", "'m"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view cp) {
  return std::find(set.begin(), set.end(), cp) != set.end();
}

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// `word` is the text before a final '.', e.g. "Mr", "J", "U.S".
bool keeps_period(std::string_view word, const WordSet& abbreviations) {
  if (word.empty()) return false;
  if (word.size() == 1 && ascii_alpha(word[0])) return true;
  if (abbreviations.count(to_lower(word)) > 0) {
    // many listed forms are also plain words ("sat", "miss", "no")
    static const WordSet kCaseFree = {"vs", "etc", "approx"};
    bool capital = word.front() >= 'A' && word.front() <= 'Z';
    if (capital || word.find('.') != std::string_view::npos || kCaseFree.count(std::string(word)) > 0) return true;
  }
  bool dotted = word.find('.') != std::string_view::npos;
  bool letters_and_dots = std::all_of(word.begin(), word.end(), [](char c) { return ascii_alpha(c) || c == '.'; });
  return dotted && letters_and_dots && word.front() != '.';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

// Length in bytes of a closing quote/bracket starting at text[i], or 0.
std::size_t closing_mark_at(std::string_view text, std::size_t i) {
  char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x9D" || text.substr(i, 3) == "\xE2\x80\x99") return 3;
  return 0;
}

std::size_t opening_mark_at(std::string_view text, std::size_t i) {
  char c = text[i];
  if (c == '"' || c == '\'' || c == '(' || c == '[' || c == '{' || c == '`') return 1;
  if (text.substr(i, 3) == "\xE2\x80\x9C" || text.substr(i, 3) == "\xE2\x80\x98") return 3;
  return 0;
}

// Splits an all-punctuation chunk into runs of identical code points ("..." stays whole).
void push_punct_runs(std::string_view chunk, std::vector<std::string>& out) {
  while (!chunk.empty()) {
    auto cp = first_code_point(chunk);
    std::size_t len = cp.size();
    while (chunk.substr(len, cp.size()) == cp) len += cp.size();
    out.emplace_back(chunk.substr(0, len));
    chunk.remove_prefix(len);
  }
}

void tokenize_chunk(std::string_view chunk, const WordSet& abbreviations, std::vector<std::string>& out) {
  if (is_punctuation(chunk)) {
    push_punct_runs(chunk, out);
    return;
  }
  std::string_view core = chunk;
  std::vector<std::string_view> leading, trailing;
  while (!core.empty() && !is_punctuation(core)) {
    auto cp = first_code_point(core);
    if (!contains(kOpening, cp)) break;
    leading.push_back(cp);
    core.remove_prefix(cp.size());
  }
  while (!core.empty() && !is_punctuation(core)) {
    auto cp = last_code_point(core);
    if (cp == ".") {
      if (core.size() >= 3 && core.substr(core.size() - 3) == "...") {
        trailing.push_back(core.substr(core.size() - 3));
        core.remove_suffix(3);
        continue;
      }
      if (keeps_period(core.substr(0, core.size() - 1), abbreviations)) break;
    } else if (!contains(kClosing, cp)) {
      break;
    }
    trailing.push_back(cp);
    core.remove_suffix(cp.size());
  }

  for (auto t : leading) out.emplace_back(t);
  if (!core.empty()) {
    if (is_punctuation(core)) {
      push_punct_runs(core, out);
    } else {
      std::string folded = to_lower(core);
      // normalize the curly apostrophe for clitic detection only
      std::string plain = folded;
      for (std::size_t p = plain.find("\xE2\x80\x99"); p != std::string::npos; p = plain.find("\xE2\x80\x99", p))
        plain.replace(p, 3, "'");
      std::size_t split_at = std::string_view::npos;
      for (auto clitic : kClitics) {
        if (plain.size() > clitic.size() && plain.ends_with(clitic)) {
          std::size_t clitic_bytes = clitic.size() + (plain.size() == folded.size() ? 0 : 2);
          if (core.size() > clitic_bytes) split_at = core.size() - clitic_bytes;
          break;
        }
      }
      if (split_at != std::string_view::npos && !is_punctuation(core.substr(0, split_at))) {
        out.emplace_back(core.substr(0, split_at));
        out.emplace_back(core.substr(split_at));
      } else {
        out.emplace_back(core);
      }
    }
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) out.emplace_back(*it);
}

// Breaks a whitespace chunk on em-dashes and double hyphens, which join words in news text.
std::vector<std::string_view> split_dashes(std::string_view chunk) {
  std::vector<std::string_view> parts;
  std::size_t start = 0, i = 0;
  while (i < chunk.size()) {
    std::size_t len = 0;
    if (chunk.substr(i, 3) == "\xE2\x80\x94") len = 3;
    else if (chunk.substr(i, 2) == "--") len = 2;
    if (len == 0) {
      ++i;
      continue;
    }
    std::size_t end = i + len;
    while (chunk.substr(end, len) == chunk.substr(i, len)) end += len;
    if (i > start) parts.push_back(chunk.substr(start, i - start));
    parts.push_back(chunk.substr(i, end - i));
    start = i = end;
  }
  if (start < chunk.size()) parts.push_back(chunk.substr(start));
  return parts;
}

}  // namespace

std::size_t DocumentCluster::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

std::vector<std::string> split_documents(std::string_view line, std::string_view separator) {
  if (separator.empty()) throw std::invalid_argument("document separator must be non-empty");
  std::string cleaned(line);
  constexpr std::string_view kNewline = "NEWLINE_CHAR";
  for (std::size_t p = cleaned.find(kNewline); p != std::string::npos; p = cleaned.find(kNewline, p))
    cleaned.replace(p, kNewline.size(), " ");

  std::vector<std::string> docs;
  std::string_view rest = cleaned;
  while (true) {
    std::size_t p = rest.find(separator);
    auto doc = trim(rest.substr(0, p));
    if (!doc.empty()) docs.emplace_back(doc);
    if (p == std::string_view::npos) break;
    rest.remove_prefix(p + separator.size());
  }
  return docs;
}

std::vector<DocumentCluster> load_cluster_file(const std::filesystem::path& path, std::string_view separator) {
  if (separator.empty()) throw std::invalid_argument("document separator must be non-empty");
  auto lines = read_lines(path);
  std::vector<DocumentCluster> clusters;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    DocumentCluster c;
    c.id = "line-" + std::to_string(i + 1);
    c.documents = split_documents(lines[i], separator);
    clusters.push_back(std::move(c));
  }
  return clusters;
}

std::vector<std::string> split_sentences(std::string_view text, const WordSet& abbreviations) {
  std::vector<std::string> out;
  const std::size_t n = text.size();
  std::size_t start = 0, i = 0;
  while (i < n) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminator(text[j])) ++j;
    std::size_t k = j;
    while (k < n) {
      std::size_t len = closing_mark_at(text, k);
      if (len == 0) break;
      k += len;
    }
    if (k == n || is_ws(text[k])) {
      bool boundary = true;
      if (j - i == 1 && text[i] == '.') {
        std::size_t w = i;
        while (w > start && !is_ws(text[w - 1])) --w;
        std::string_view word = text.substr(w, i - w);
        while (!word.empty()) {
          std::size_t len = opening_mark_at(word, 0);
          if (len == 0) break;
          word.remove_prefix(len);
        }
        if (keeps_period(word, abbreviations)) boundary = false;
      }
      std::size_t m = k;
      while (m < n && is_ws(text[m])) ++m;
      while (m < n) {
        std::size_t len = opening_mark_at(text, m);
        if (len == 0) break;
        m += len;
      }
      if (m < n && text[m] >= 'a' && text[m] <= 'z') boundary = false;
      if (boundary) {
        auto piece = trim(text.substr(start, k - start));
        if (!piece.empty()) out.emplace_back(piece);
        start = k;
      }
    }
    i = std::max(i + 1, k);
  }
  auto tail = trim(text.substr(std::min(start, n)));
  if (!tail.empty()) out.emplace_back(tail);
  return out;
}

std::vector<Token> tokenize(std::string_view sentence_text, const WordSet& stopwords, const WordSet& abbreviations) {
  std::vector<std::string> pieces;
  for (auto chunk : split_whitespace(sentence_text)) {
    for (auto part : split_dashes(chunk)) tokenize_chunk(part, abbreviations, pieces);
  }
  std::vector<Token> tokens;
  tokens.reserve(pieces.size());
  for (auto& p : pieces) {
    Token t;
    t.lower = to_lower(p);
    t.is_punct = is_punctuation(p);
    t.is_stopword = !t.is_punct && stopwords.count(t.lower) > 0;
    t.surface = std::move(p);
    tokens.push_back(std::move(t));
  }
  return tokens;
}

void segment_cluster(DocumentCluster& cluster, const WordSet& stopwords, const WordSet& abbreviations) {
  cluster.sentences.clear();
  std::size_t global = 0;
  for (std::size_t d = 0; d < cluster.documents.size(); ++d) {
    std::size_t local = 0;
    for (auto& text : split_sentences(cluster.documents[d], abbreviations)) {
      auto tokens = tokenize(text, stopwords, abbreviations);
      if (tokens.empty()) continue;
      Sentence s;
      s.tokens = std::move(tokens);
      s.text = std::move(text);
      s.doc_index = d;
      s.sent_index = local++;
      s.global_index = global++;
      cluster.sentences.push_back(std::move(s));
    }
  }
}

DocumentCluster truncate_cluster(const DocumentCluster& cluster, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("token budget must be positive");
  DocumentCluster out;
  out.id = cluster.id;
  out.documents = cluster.documents;
  out.token_budget = budget;
  std::size_t used = 0;
  for (const auto& s : cluster.sentences) {
    if (!out.sentences.empty() && used + s.tokens.size() > budget) break;
    used += s.tokens.size();
    out.sentences.push_back(s);
  }
  return out;
}

}  // namespace summpip
