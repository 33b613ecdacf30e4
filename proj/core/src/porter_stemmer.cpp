#include "summpip/porter_stemmer.hpp"

#include <array>
#include <utility>

namespace summpip {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view w) : b_(w) {}

  std::string run() {
    if (b_.size() <= 2) return b_;
    step1a();
    step1b();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_;
  }

 private:
  std::string b_;

  bool cons(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u': return false;
      case 'y': return i == 0 || !cons(i - 1);
      default: return true;
    }
  }

  // number of VC sequences in b_[0, len)
  int measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && cons(i)) ++i;
    while (i < len) {
      while (i < len && !cons(i)) ++i;
      if (i >= len) break;
      while (i < len && cons(i)) ++i;
      ++m;
    }
    return m;
  }

  bool has_vowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && cons(len - 1);
  }

  // cvc ending at len-1 where the last consonant is not w, x or y
  bool cvc(std::size_t len) const {
    if (len < 3 || !cons(len - 1) || cons(len - 2) || !cons(len - 3)) return false;
    char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) const { return b_.size() >= s.size() && std::string_view(b_).ends_with(s); }
  std::size_t stem_len(std::string_view suffix) const { return b_.size() - suffix.size(); }
  void replace(std::string_view suffix, std::string_view with) {
    b_.resize(stem_len(suffix));
    b_ += with;
  }

  template <std::size_t N>
  void apply_first(const std::array<std::pair<std::string_view, std::string_view>, N>& rules, int min_m) {
    for (const auto& [suffix, with] : rules) {
      if (!ends(suffix)) continue;
      if (measure(stem_len(suffix)) > min_m) replace(suffix, with);
      return;
    }
  }

  void step1a() {
    if (ends("sses")) replace("sses", "ss");
    else if (ends("ies")) replace("ies", "i");
    else if (ends("ss")) return;
    else if (ends("s")) replace("s", "");
  }

  void step1b() {
    if (ends("eed")) {
      if (measure(stem_len("eed")) > 0) replace("eed", "ee");
      return;
    }
    std::string_view suffix;
    if (ends("ed")) suffix = "ed";
    else if (ends("ing")) suffix = "ing";
    else return;
    if (!has_vowel(stem_len(suffix))) return;
    replace(suffix, "");
    if (ends("at")) replace("at", "ate");
    else if (ends("bl")) replace("bl", "ble");
    else if (ends("iz")) replace("iz", "ize");
    else if (double_cons(b_.size())) {
      char c = b_.back();
      if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
    } else if (measure(b_.size()) == 1 && cvc(b_.size())) {
      b_ += 'e';
    }
  }

  void step1c() {
    if (ends("y") && has_vowel(stem_len("y"))) b_.back() = 'i';
  }

  void step2() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},    {"izer", "ize"},
        {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},        {"ousli", "ous"},
        {"ization", "ize"}, {"ation", "ate"},   {"ator", "ate"},    {"alism", "al"},     {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},    {"biliti", "ble"},
    }};
    apply_first(rules, 0);
  }

  void step3() {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"}, {"ical", "ic"}, {"ful", ""}, {"ness", ""},
    }};
    apply_first(rules, 0);
  }

  void step4() {
    static constexpr std::array<std::string_view, 19> suffixes{
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize"};
    // longest matching suffix decides (ement over ment over ent)
    std::string_view match;
    for (auto s : suffixes) {
      if (ends(s) && s.size() > match.size()) match = s;
    }
    if (match.empty()) return;
    std::size_t len = stem_len(match);
    if (match == "ion" && (len == 0 || (b_[len - 1] != 's' && b_[len - 1] != 't'))) return;
    if (measure(len) > 1) b_.resize(len);
  }

  void step5() {
    if (ends("e")) {
      std::size_t len = stem_len("e");
      int m = measure(len);
      if (m > 1 || (m == 1 && !cvc(len))) b_.pop_back();
    }
    if (ends("ll") && measure(b_.size()) > 1) b_.pop_back();
  }
};

}  // namespace

std::string porter_stem(std::string_view word) { return Stemmer(word).run(); }

}  // namespace summpip
