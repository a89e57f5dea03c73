#include "strata/braid_word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "word_tokens.hpp"

namespace strata {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
  for (const auto& letter : letters_) {
    if (letter.index < 1 || letter.index > strands_ - 1 || (letter.sign != 1 && letter.sign != -1)) {
      throw std::invalid_argument("braid letter out of range for B_" + std::to_string(strands_));
    }
  }
}

void BraidWord::push_back(Letter letter) {
  if (letter.index < 1 || letter.index > strands_ - 1 || (letter.sign != 1 && letter.sign != -1)) {
    throw std::invalid_argument("braid letter out of range for B_" + std::to_string(strands_));
  }
  letters_.push_back(letter);
}

void BraidWord::append(const BraidWord& other) {
  if (other.strands_ != strands_) throw std::invalid_argument("strand count mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  BraidWord word(strands);
  for (const auto& token : detail::tokenize_word(text)) {
    int i = 0;
    int j = 0;
    BraidWord piece(strands);
    if (token.base == "e" || token.base == "1") {
      continue;
    } else if (token.base == "delta") {
      piece = delta_word(strands);
    } else if (detail::parse_indexed_name(token.base, 's', i)) {
      piece.push_back({i, 1});
    } else if (detail::parse_pure_name(token.base, i, j)) {
      piece = pure_generator(PureGeneratorId(i, j, strands));
    } else {
      throw std::invalid_argument("unknown braid token: " + token.base);
    }
    word.append(power(piece, token.exponent));
  }
  return word;
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    if (p) out << ' ';
    out << 's' << letters_[p].index;
    if (letters_[p].sign < 0) out << "^-1";
  }
  return out.str();
}

PureGeneratorId::PureGeneratorId(int i_, int j_, int strands_) : i(i_), j(j_), strands(strands_) {
  if (!(1 <= i && i < j && j <= strands)) {
    throw std::invalid_argument("pure generator a[" + std::to_string(i) + "," + std::to_string(j) +
                                "] needs 1 <= i < j <= " + std::to_string(strands));
  }
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
  BraidWord out = u;
  out.append(v);
  return out;
}

BraidWord inverse(const BraidWord& u) {
  std::vector<Letter> letters(u.letters().rbegin(), u.letters().rend());
  for (auto& letter : letters) letter.sign = -letter.sign;
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord power(const BraidWord& u, long exponent) {
  const BraidWord base = exponent < 0 ? inverse(u) : u;
  BraidWord out(u.strands());
  for (long p = 0; p < std::labs(exponent); ++p) out.append(base);
  return out;
}

int exponent_sum(const BraidWord& u) {
  int sum = 0;
  for (const auto& letter : u.letters()) sum += letter.sign;
  return sum;
}

Permutation permutation_image(const BraidWord& u) {
  std::vector<int> arrangement(u.strands());
  for (int p = 0; p < u.strands(); ++p) arrangement[p] = p + 1;
  for (const auto& letter : u.letters()) {
    std::swap(arrangement[letter.index - 1], arrangement[letter.index]);
  }
  return Permutation(std::move(arrangement));
}

BraidWord pure_generator(const PureGeneratorId& id) {
  BraidWord word(id.strands);
  for (int s = id.j - 1; s > id.i; --s) word.push_back({s, 1});
  word.push_back({id.i, 1});
  word.push_back({id.i, 1});
  for (int s = id.i + 1; s <= id.j - 1; ++s) word.push_back({s, -1});
  return word;
}

BraidWord delta_word(int k) {
  if (k < 2) throw std::invalid_argument("delta_word needs k >= 2");
  BraidWord word(k);
  for (int top = 1; top <= k - 1; ++top) {
    for (int s = top; s >= 1; --s) word.push_back({s, 1});
  }
  return word;
}

BraidWord d_word(int k) {
  if (k < 2) throw std::invalid_argument("d_word needs k >= 2");
  BraidWord word(k);
  for (int j = 2; j <= k; ++j) {
    for (int i = 1; i < j; ++i) word.append(pure_generator(PureGeneratorId(i, j, k)));
  }
  return word;
}

}  // namespace strata
