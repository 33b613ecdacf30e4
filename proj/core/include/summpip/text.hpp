#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace summpip {

using WordSet = std::unordered_set<std::string>;

// ASCII case folding; bytes outside ASCII pass through unchanged.
std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

/// True when the token has no letter or digit. Non-ASCII code points in the
/// General Punctuation block (curly quotes, dashes, ellipsis) count as punctuation.
bool is_punctuation(std::string_view token);

/// True when the first code point is an ASCII uppercase letter.
bool starts_upper(std::string_view token);

/// True when the first code point is an ASCII lowercase letter.
bool starts_lower(std::string_view token);

/// The leading / trailing UTF-8 code point of `s` as a byte view (empty for empty input).
std::string_view first_code_point(std::string_view s);
std::string_view last_code_point(std::string_view s);

/// Reads every line of a UTF-8 text file, stripping a trailing '\r'. Throws IoError.
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Loads a one-entry-per-line word list, case-folded. Blank lines and lines
/// starting with '#' are ignored.
WordSet load_word_set(const std::filesystem::path& path);

}  // namespace summpip
