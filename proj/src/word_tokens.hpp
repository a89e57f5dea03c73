#pragma once

// Tokenizer shared by the braid-word, presentation and group-word parsers.

#include <string>
#include <string_view>
#include <vector>

namespace strata::detail {

struct Token {
  std::string base;
  long exponent = 1;
};

/// Splits on whitespace outside square brackets, then peels an optional
/// "^<integer>" suffix off each piece.
std::vector<Token> tokenize_word(std::string_view text);

/// Splits on `separator` outside square brackets; pieces are trimmed.
std::vector<std::string> split_top_level(std::string_view text, char separator);

std::string trim(std::string_view text);

/// Parses "a[i,j]" into (i, j); returns false if `base` has another shape.
bool parse_pure_name(std::string_view base, int& i, int& j);

/// Parses "s<i>" (or a custom single-letter prefix) into i.
bool parse_indexed_name(std::string_view base, char prefix, int& index);

}  // namespace strata::detail
