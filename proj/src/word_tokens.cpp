#include "word_tokens.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace strata::detail {

namespace {

bool parse_int(std::string_view text, long& value) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

std::string trim(std::string_view text) {
  std::size_t a = 0;
  std::size_t b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return std::string(text.substr(a, b - a));
}

std::vector<std::string> split_top_level(std::string_view text, char separator) {
  std::vector<std::string> pieces;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t p = 0; p <= text.size(); ++p) {
    if (p == text.size() || (text[p] == separator && depth == 0)) {
      pieces.push_back(trim(text.substr(start, p - start)));
      start = p + 1;
    } else if (text[p] == '[') {
      ++depth;
    } else if (text[p] == ']') {
      if (--depth < 0) throw std::invalid_argument("unbalanced ']' in: " + std::string(text));
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '[' in: " + std::string(text));
  return pieces;
}

std::vector<Token> tokenize_word(std::string_view text) {
  std::vector<std::string> raw;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!current.empty()) raw.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') ++depth;
    if (c == ']' && --depth < 0) throw std::invalid_argument("unbalanced ']' in word");
    current.push_back(c);
  }
  if (depth != 0) throw std::invalid_argument("unbalanced '[' in word");
  if (!current.empty()) raw.push_back(std::move(current));

  std::vector<Token> tokens;
  tokens.reserve(raw.size());
  for (const auto& piece : raw) {
    Token token;
    const auto caret = piece.rfind('^');
    if (caret != std::string::npos && piece.find(']', caret) == std::string::npos) {
      token.base = piece.substr(0, caret);
      if (!parse_int(std::string_view(piece).substr(caret + 1), token.exponent)) {
        throw std::invalid_argument("malformed exponent in token: " + piece);
      }
    } else {
      token.base = piece;
    }
    if (token.base.empty()) throw std::invalid_argument("empty generator in token: " + piece);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

bool parse_pure_name(std::string_view base, int& i, int& j) {
  if (base.size() < 6 || base[0] != 'a' || base[1] != '[' ||
      base.back() != ']') {
    return false;
  }
  const auto inner = base.substr(2, base.size() - 3);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) return false;
  long a = 0;
  long b = 0;
  if (!parse_int(trim(inner.substr(0, comma)), a) || !parse_int(trim(inner.substr(comma + 1)), b)) {
    return false;
  }
  i = static_cast<int>(a);
  j = static_cast<int>(b);
  return true;
}

bool parse_indexed_name(std::string_view base, char prefix, int& index) {
  if (base.size() < 2 || base[0] != prefix) return false;
  long value = 0;
  if (!parse_int(base.substr(1), value) || base[1] == '+') return false;
  index = static_cast<int>(value);
  return true;
}

}  // namespace strata::detail
