#include "summpip/resources.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "summpip/errors.hpp"

namespace summpip {

namespace {

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("not a number: '" + std::string(s) + "'", line);
  return v;
}

std::size_t parse_count(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError("not a count: '" + std::string(s) + "'", line);
  return v;
}

std::pair<std::string_view, std::string_view> split_tab(std::string_view line) {
  auto p = line.find('\t');
  if (p == std::string_view::npos) return {trim(line), {}};
  return {trim(line.substr(0, p)), trim(line.substr(p + 1))};
}

bool is_double_consonant(std::string_view s) {
  if (s.size() < 2) return false;
  char a = s[s.size() - 1];
  return a == s[s.size() - 2] && std::string_view("aeiou").find(a) == std::string_view::npos;
}

// Base-form candidates for an inflected English word, most specific first.
std::vector<std::string> base_candidates(std::string_view w) {
  std::vector<std::string> out;
  auto strip = [&](std::string_view suffix) { return std::string(w.substr(0, w.size() - suffix.size())); };
  if (w.size() > 4 && w.ends_with("ies")) out.push_back(strip("ies") + "y");
  if (w.size() > 3 && w.ends_with("es")) {
    std::string stem = strip("es");
    if (stem.ends_with('s') || stem.ends_with('x') || stem.ends_with('z') || stem.ends_with("ch") ||
        stem.ends_with("sh") || stem.ends_with('o')) {
      out.push_back(stem);
    }
  }
  if (w.size() > 2 && w.ends_with('s') && !w.ends_with("ss")) out.push_back(strip("s"));
  if (w.size() > 4 && w.ends_with("ied")) out.push_back(strip("ied") + "y");
  if (w.size() > 3 && w.ends_with("ed")) {
    std::string stem = strip("ed");
    out.push_back(stem);
    out.push_back(stem + "e");
    if (is_double_consonant(stem)) out.push_back(stem.substr(0, stem.size() - 1));
  }
  if (w.size() > 4 && w.ends_with("ing")) {
    std::string stem = strip("ing");
    out.push_back(stem);
    out.push_back(stem + "e");
    if (is_double_consonant(stem)) out.push_back(stem.substr(0, stem.size() - 1));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

bool WordVectorStore::add(std::string_view word, std::vector<double> vector) {
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_ || dimension_ == 0) throw std::invalid_argument("vector dimension mismatch");
  std::string key = to_lower(word);
  if (index_.count(key) > 0) return false;
  double sq = 0.0;
  for (double x : vector) sq += x * x;
  index_.emplace(key, words_.size());
  words_.push_back(std::move(key));
  norms_.push_back(std::sqrt(sq));
  rows_.push_back(std::move(vector));
  return true;
}

const std::vector<double>* WordVectorStore::find(std::string_view word) const {
  auto it = index_.find(to_lower(word));
  return it == index_.end() ? nullptr : &rows_[it->second];
}

WordVectorStore load_vectors(const std::filesystem::path& path) {
  auto lines = read_lines(path);
  if (lines.empty()) throw FormatError("missing header", 1);
  auto header = split_whitespace(lines[0]);
  if (header.size() != 2) throw FormatError("header must be 'count dim'", 1);
  std::size_t count = parse_count(header[0], 1);
  std::size_t dim = parse_count(header[1], 1);
  if (dim == 0) throw FormatError("dimension must be positive", 1);

  WordVectorStore store(dim);
  std::size_t rows = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_whitespace(lines[i]);
    if (fields.empty()) continue;
    if (fields.size() != dim + 1) {
      throw FormatError("expected " + std::to_string(dim) + " values, got " + std::to_string(fields.size() - 1), i + 1);
    }
    std::vector<double> v(dim);
    for (std::size_t d = 0; d < dim; ++d) v[d] = parse_double(fields[d + 1], i + 1);
    store.add(fields[0], std::move(v));
    ++rows;
  }
  if (rows != count) {
    throw FormatError("header announces " + std::to_string(count) + " rows, file has " + std::to_string(rows),
                      lines.size());
  }
  return store;
}

std::vector<double> sentence_embedding(const Sentence& sentence, const WordVectorStore& store) {
  std::vector<double> mean(store.dimension(), 0.0);
  std::size_t used = 0;
  for (const auto& t : sentence.tokens) {
    if (t.is_punct) continue;
    const auto* v = store.find(t.lower);
    if (v == nullptr) continue;
    for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += (*v)[d];
    ++used;
  }
  if (used > 0) {
    for (double& x : mean) x /= static_cast<double>(used);
  }
  return mean;
}

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("cosine: dimension mismatch");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

std::vector<std::string> nearest_words(std::string_view word, const WordVectorStore& store, std::size_t n) {
  const auto* query = store.find(word);
  if (query == nullptr || n == 0) return {};
  std::string key = to_lower(word);
  double qnorm = 0.0;
  for (double x : *query) qnorm += x * x;
  qnorm = std::sqrt(qnorm);

  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(store.size());
  for (std::size_t r = 0; r < store.size(); ++r) {
    if (store.words()[r] == key) continue;
    double denom = qnorm * store.norm_at(r);
    double sim = 0.0;
    if (denom > 0.0) {
      auto row = store.vector_at(r);
      double dot = 0.0;
      for (std::size_t d = 0; d < row.size(); ++d) dot += row[d] * (*query)[d];
      sim = dot / denom;
    }
    scored.emplace_back(sim, r);
  }
  auto better = [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return store.words()[a.second] < store.words()[b.second];
  };
  std::size_t take = std::min(n, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end(), better);
  std::vector<std::string> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(store.words()[scored[i].second]);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::kVerb: return "VERB";
    case CoarsePos::kNoun: return "NOUN";
    case CoarsePos::kAdj: return "ADJ";
    case CoarsePos::kOther: return "OTHER";
    case CoarsePos::kPunct: return "PUNCT";
  }
  return "OTHER";
}

std::optional<std::string> VerbLexicon::lemmatize(std::string_view lower) const {
  std::string w(lower);
  if (auto it = irregular_.find(w); it != irregular_.end()) return it->second;
  if (lemmas_.count(w) > 0) return w;
  for (auto& cand : base_candidates(w)) {
    if (lemmas_.count(cand) > 0) return cand;
  }
  return std::nullopt;
}

VerbLexicon load_verb_lexicon(const std::filesystem::path& path) {
  WordSet lemmas;
  std::unordered_map<std::string, std::string> irregular;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [form, lemma] = split_tab(lines[i]);
    if (form.empty() || form.front() == '#') continue;
    if (lemma.empty()) {
      lemmas.insert(to_lower(form));
    } else {
      irregular.emplace(to_lower(form), to_lower(lemma));
    }
  }
  return VerbLexicon(std::move(lemmas), std::move(irregular));
}

CoarsePos PosLexicon::tag(std::string_view lower) const {
  if (auto it = tags_.find(std::string(lower)); it != tags_.end()) return it->second;
  for (auto& cand : base_candidates(lower)) {
    auto it = tags_.find(cand);
    if (it == tags_.end()) continue;
    return it->second;
  }
  return CoarsePos::kNoun;
}

PosLexicon load_pos_lexicon(const std::filesystem::path& path) {
  std::unordered_map<std::string, CoarsePos> tags;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [word, tag] = split_tab(lines[i]);
    if (word.empty() || word.front() == '#') continue;
    CoarsePos pos;
    if (tag == "VERB") pos = CoarsePos::kVerb;
    else if (tag == "NOUN") pos = CoarsePos::kNoun;
    else if (tag == "ADJ") pos = CoarsePos::kAdj;
    else if (tag == "OTHER") pos = CoarsePos::kOther;
    else throw FormatError("unknown POS tag '" + std::string(tag) + "'", i + 1);
    tags.emplace(to_lower(word), pos);
  }
  return PosLexicon(std::move(tags));
}

DeverbalLexicon::DeverbalLexicon(std::map<std::string, std::set<std::string>> entries) {
  for (auto& [verb, nouns] : entries) {
    if (nouns.empty()) throw std::invalid_argument("deverbal entry without nouns: " + verb);
    entries_.emplace(verb, std::move(nouns));
  }
}

const std::set<std::string>* DeverbalLexicon::find(std::string_view verb) const {
  auto it = entries_.find(verb);
  return it == entries_.end() ? nullptr : &it->second;
}

DeverbalLexicon load_deverbal_lexicon(const std::filesystem::path& path) {
  std::map<std::string, std::set<std::string>> entries;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [verb, nouns] = split_tab(lines[i]);
    if (verb.empty() || verb.front() == '#') continue;
    std::set<std::string> forms;
    std::string_view rest = nouns;
    while (!rest.empty()) {
      auto p = rest.find(',');
      auto noun = trim(rest.substr(0, p));
      if (!noun.empty()) forms.insert(to_lower(noun));
      if (p == std::string_view::npos) break;
      rest.remove_prefix(p + 1);
    }
    if (forms.empty()) throw FormatError("verb without noun forms", i + 1);
    auto& slot = entries[to_lower(verb)];
    slot.insert(forms.begin(), forms.end());
  }
  return DeverbalLexicon(std::move(entries));
}

std::set<std::string> deverbal_nouns(std::string_view verb, const DeverbalLexicon& lexicon,
                                     const WordVectorStore& store, std::size_t n) {
  const auto* nouns = lexicon.find(verb);
  if (nouns == nullptr) return {};
  std::set<std::string> out(nouns->begin(), nouns->end());
  for (const auto& noun : *nouns) {
    for (auto& w : nearest_words(noun, store, n)) out.insert(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

MarkerList::MarkerList(std::vector<std::string> markers) : markers_(std::move(markers)) {
  for (auto& m : markers_) {
    m = to_lower(trim(m));
    std::vector<std::string> words;
    for (auto w : split_whitespace(m)) words.emplace_back(w);
    split_.push_back(std::move(words));
  }
}

bool MarkerList::starts_with_marker(std::span<const Token> tokens) const {
  std::vector<std::string_view> lead;
  for (const auto& t : tokens) {
    if (t.is_punct) {
      // leading quotes are skipped; later punctuation ends the phrase
      if (lead.empty()) continue;
      break;
    }
    lead.push_back(t.lower);
    if (lead.size() >= 6) break;
  }
  for (const auto& words : split_) {
    if (words.empty() || words.size() > lead.size()) continue;
    if (std::equal(words.begin(), words.end(), lead.begin())) return true;
  }
  return false;
}

MarkerList load_markers(const std::filesystem::path& path) {
  std::vector<std::string> markers;
  for (const auto& line : read_lines(path)) {
    auto m = trim(line);
    if (m.empty() || m.front() == '#') continue;
    markers.emplace_back(m);
  }
  return MarkerList(std::move(markers));
}

// ---------------------------------------------------------------------------

std::string_view to_string(EntityType type) {
  switch (type) {
    case EntityType::kOrg: return "ORG";
    case EntityType::kPerson: return "PERSON";
    case EntityType::kProduct: return "PRODUCT";
    case EntityType::kLocation: return "LOCATION";
    case EntityType::kOther: return "OTHER";
  }
  return "OTHER";
}

std::optional<EntityType> parse_entity_type(std::string_view name) {
  if (name == "ORG") return EntityType::kOrg;
  if (name == "PERSON") return EntityType::kPerson;
  if (name == "PRODUCT") return EntityType::kProduct;
  if (name == "LOCATION") return EntityType::kLocation;
  if (name == "OTHER") return EntityType::kOther;
  return std::nullopt;
}

Gazetteer::Gazetteer(const std::map<std::string, EntityType>& phrases) {
  for (const auto& [phrase, type] : phrases) {
    std::vector<std::string> key;
    for (auto& t : tokenize(phrase, {}, {})) key.push_back(std::move(t.lower));
    if (key.empty()) continue;
    max_tokens_ = std::max(max_tokens_, key.size());
    entries_.emplace(std::move(key), type);
  }
}

std::optional<std::pair<std::size_t, EntityType>> Gazetteer::longest_match(std::span<const Token> tokens,
                                                                           std::size_t pos) const {
  std::size_t longest = std::min(max_tokens_, tokens.size() - std::min(pos, tokens.size()));
  std::vector<std::string> key;
  for (std::size_t len = longest; len >= 1; --len) {
    key.clear();
    for (std::size_t i = pos; i < pos + len; ++i) key.push_back(tokens[i].lower);
    if (auto it = entries_.find(key); it != entries_.end()) return std::make_pair(len, it->second);
  }
  return std::nullopt;
}

Gazetteer load_gazetteer(const std::filesystem::path& path) {
  std::map<std::string, EntityType> phrases;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [phrase, type] = split_tab(lines[i]);
    if (phrase.empty() || phrase.front() == '#') continue;
    auto parsed = parse_entity_type(type);
    if (!parsed) throw FormatError("unknown entity type '" + std::string(type) + "'", i + 1);
    phrases.emplace(to_lower(phrase), *parsed);
  }
  return Gazetteer(phrases);
}

std::vector<EntityMention> detect_entities(const Sentence& sentence, const Gazetteer& gazetteer) {
  const auto& toks = sentence.tokens;
  std::vector<EntityMention> out;
  std::size_t first_word = 0;
  while (first_word < toks.size() && toks[first_word].is_punct) ++first_word;

  auto capitalized = [&](std::size_t i) {
    return !toks[i].is_punct && !toks[i].is_stopword && starts_upper(toks[i].surface);
  };
  auto emit = [&](std::size_t begin, std::size_t len, EntityType type) {
    EntityMention m;
    for (std::size_t k = begin; k < begin + len; ++k) {
      if (k > begin) m.surface += ' ';
      m.surface += toks[k].surface;
    }
    m.type = type;
    m.sentence_index = sentence.global_index;
    m.first_token = begin;
    m.token_count = len;
    out.push_back(std::move(m));
  };

  std::size_t i = 0;
  while (i < toks.size()) {
    bool proper = starts_upper(toks[i].surface) || (!toks[i].surface.empty() && std::isdigit(
                                                      static_cast<unsigned char>(toks[i].surface[0])));
    if (proper && !toks[i].is_punct) {
      if (auto hit = gazetteer.longest_match(toks, i)) {
        emit(i, hit->first, hit->second);
        i += hit->first;
        continue;
      }
    }
    if (i != first_word && capitalized(i)) {
      std::size_t j = i + 1;
      while (j < toks.size() && capitalized(j) && !gazetteer.longest_match(toks, j)) ++j;
      emit(i, j - i, EntityType::kOther);
      i = j;
      continue;
    }
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------

ResourcePaths ResourcePaths::in_directory(const std::filesystem::path& data_dir) {
  ResourcePaths p;
  p.stopwords = data_dir / "stopwords.txt";
  p.abbreviations = data_dir / "abbreviations.txt";
  p.markers = data_dir / "discourse_markers.txt";
  p.deverbal = data_dir / "deverbal.tsv";
  p.gazetteer = data_dir / "gazetteer.tsv";
  p.verbs = data_dir / "verbs.txt";
  p.pos_lexicon = data_dir / "pos_lexicon.tsv";
  return p;
}

Resources load_resources(const ResourcePaths& paths) {
  const std::pair<const char*, const std::filesystem::path*> required[] = {
      {"vectors", &paths.vectors},         {"stopwords", &paths.stopwords}, {"abbreviations", &paths.abbreviations},
      {"markers", &paths.markers},         {"deverbal", &paths.deverbal},   {"gazetteer", &paths.gazetteer},
      {"verbs", &paths.verbs},             {"pos-lexicon", &paths.pos_lexicon}};
  for (const auto& [name, path] : required) {
    std::error_code ec;
    if (path->empty() || !std::filesystem::is_regular_file(*path, ec)) {
      throw IoError(std::string("missing ") + name + " resource: '" + path->string() + "'");
    }
  }
  Resources r;
  r.stopwords = load_word_set(paths.stopwords);
  r.abbreviations = load_word_set(paths.abbreviations);
  r.vectors = load_vectors(paths.vectors);
  r.markers = load_markers(paths.markers);
  r.deverbal = load_deverbal_lexicon(paths.deverbal);
  r.gazetteer = load_gazetteer(paths.gazetteer);
  r.verbs = load_verb_lexicon(paths.verbs);
  r.pos = load_pos_lexicon(paths.pos_lexicon);
  return r;
}

}  // namespace summpip
