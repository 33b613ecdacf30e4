#include "summpip/text.hpp"

#include <cctype>
#include <fstream>

#include "summpip/errors.hpp"

namespace summpip {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Decodes one UTF-8 code point at `i`, advancing it. Malformed bytes decode as
// themselves so the caller never stalls.
char32_t next_code_point(std::string_view s, std::size_t& i) {
  auto b0 = static_cast<unsigned char>(s[i]);
  int extra = b0 < 0x80 ? 0 : (b0 >> 5) == 0x6 ? 1 : (b0 >> 4) == 0xE ? 2 : (b0 >> 3) == 0x1E ? 3 : -1;
  if (extra <= 0 || i + extra >= s.size()) {
    ++i;
    return b0;
  }
  char32_t cp = b0 & (0x3F >> extra);
  for (int k = 1; k <= extra; ++k) {
    auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += extra + 1;
  return cp;
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool is_punctuation(std::string_view token) {
  if (token.empty()) return false;
  std::size_t i = 0;
  while (i < token.size()) {
    char32_t cp = next_code_point(token, i);
    if (cp < 0x80) {
      if (std::isalnum(static_cast<int>(cp))) return false;
    } else if (!(cp >= 0x2000 && cp <= 0x206F) && !(cp >= 0xA0 && cp <= 0xBF)) {
      return false;
    }
  }
  return true;
}

bool starts_upper(std::string_view token) { return !token.empty() && token[0] >= 'A' && token[0] <= 'Z'; }

bool starts_lower(std::string_view token) { return !token.empty() && token[0] >= 'a' && token[0] <= 'z'; }

std::string_view first_code_point(std::string_view s) {
  if (s.empty()) return s;
  std::size_t i = 0;
  next_code_point(s, i);
  return s.substr(0, i);
}

std::string_view last_code_point(std::string_view s) {
  if (s.empty()) return s;
  std::size_t start = s.size() - 1;
  while (start > 0 && (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80 && s.size() - start < 4) --start;
  std::size_t i = start;
  next_code_point(s, i);
  if (i != s.size()) start = s.size() - 1;
  return s.substr(start);
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  return lines;
}

WordSet load_word_set(const std::filesystem::path& path) {
  WordSet words;
  for (const auto& line : read_lines(path)) {
    auto w = trim(line);
    if (w.empty() || w.front() == '#') continue;
    words.insert(to_lower(w));
  }
  return words;
}

}  // namespace summpip
