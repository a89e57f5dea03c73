#include "strata/garside.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "word_tokens.hpp"

namespace strata {

namespace {

// A permutation braid as a 0-based arrangement: arr[p] is the strand at
// position p. σ_{p+1} is a right descent iff arr[p] > arr[p+1].
using Arrangement = std::vector<int>;

bool is_identity(const Arrangement& a) {
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] != static_cast<int>(p)) return false;
  }
  return true;
}

bool is_half_twist(const Arrangement& a) {
  const int k = static_cast<int>(a.size());
  for (int p = 0; p < k; ++p) {
    if (a[p] != k - 1 - p) return false;
  }
  return true;
}

Arrangement generator_simple(int k, int p) {
  Arrangement a(k);
  for (int q = 0; q < k; ++q) a[q] = q;
  std::swap(a[p], a[p + 1]);
  return a;
}

// Δ·σ_{p+1}^{-1}: the half twist with its last crossing removed.
Arrangement complement_simple(int k, int p) {
  Arrangement a(k);
  for (int q = 0; q < k; ++q) a[q] = k - 1 - q;
  std::swap(a[p], a[p + 1]);
  return a;
}

// Makes (left, right) left-weighted by moving the starting generators of
// `right` that `left` can absorb. Returns true if anything moved.
bool left_weight(Arrangement& left, Arrangement& right) {
  const int k = static_cast<int>(left.size());
  Arrangement where(k);
  for (int p = 0; p < k; ++p) where[right[p]] = p;
  bool changed = false;
  for (bool moved = true; moved;) {
    moved = false;
    for (int p = 0; p + 1 < k; ++p) {
      if (where[p] > where[p + 1] && left[p] < left[p + 1]) {
        std::swap(left[p], left[p + 1]);
        std::swap(right[where[p]], right[where[p + 1]]);
        std::swap(where[p], where[p + 1]);
        moved = changed = true;
      }
    }
  }
  return changed;
}

// Maintains Δ^delta · factors[0] ⋯ factors[r-1] of a positive braid in
// left normal form while simple factors are appended on the right.
class PositiveNormalizer {
 public:
  explicit PositiveNormalizer(int k) : k_(k) {}

  void push(Arrangement simple) {
    if (is_identity(simple)) return;
    factors_.push_back(std::move(simple));
    for (std::size_t t = factors_.size() - 1; t > 0; --t) {
      if (!left_weight(factors_[t - 1], factors_[t])) break;
    }
    std::size_t leading = 0;
    while (leading < factors_.size() && is_half_twist(factors_[leading])) ++leading;
    if (leading > 0) {
      delta_ += static_cast<long>(leading);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(leading));
    }
    while (!factors_.empty() && is_identity(factors_.back())) factors_.pop_back();
  }

  long delta() const { return delta_; }
  const std::vector<Arrangement>& factors() const { return factors_; }

 private:
  int k_;
  long delta_ = 0;
  std::vector<Arrangement> factors_;
};

Permutation to_permutation(const Arrangement& a) {
  std::vector<int> images(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) images[p] = a[p] + 1;
  return Permutation(std::move(images));
}

Arrangement to_arrangement(const Permutation& perm) {
  Arrangement a(perm.size());
  for (int p = 0; p < perm.size(); ++p) a[p] = perm.images()[p] - 1;
  return a;
}

}  // namespace

GarsideForm garside_normal_form(const BraidWord& u) {
  const int k = u.strands();
  GarsideForm form;
  form.strands = k;
  if (k < 2) return form;

  // σ_i^{-1} = Δ^{-1}·(Δσ_i^{-1}). Collecting every Δ^{-1} at the front
  // conjugates each earlier factor once per Δ^{-1} passing it, and Δ
  // conjugation sends σ_i to σ_{k-i}.
  const auto& letters = u.letters();
  long negatives_after = 0;
  for (const auto& letter : letters) negatives_after += letter.sign < 0 ? 1 : 0;
  const long total_negatives = negatives_after;

  PositiveNormalizer normalizer(k);
  for (const auto& letter : letters) {
    if (letter.sign < 0) --negatives_after;
    int index = letter.index;
    if (negatives_after % 2 == 1) index = k - index;
    normalizer.push(letter.sign > 0 ? generator_simple(k, index - 1) : complement_simple(k, index - 1));
  }

  form.delta_power = normalizer.delta() - total_negatives;
  form.factors.reserve(normalizer.factors().size());
  for (const auto& simple : normalizer.factors()) form.factors.push_back(to_permutation(simple));
  return form;
}

bool equal_in_braid(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw std::invalid_argument("strand count mismatch");
  return garside_normal_form(multiply(u, inverse(v))).is_identity();
}

GarsideForm reduce_mod_delta_square(GarsideForm form) {
  form.delta_power = ((form.delta_power % 2) + 2) % 2;
  return form;
}

BraidWord GarsideForm::to_word() const {
  BraidWord word(strands);
  if (delta_power != 0) word.append(power(delta_word(strands), delta_power));
  for (const auto& factor : factors) word.append(garside::spell_simple(factor));
  return word;
}

std::string GarsideForm::to_string() const {
  std::ostringstream out;
  out << "Δ^" << delta_power << " |";
  for (std::size_t t = 0; t < factors.size(); ++t) {
    out << (t ? " ; " : " ") << factors[t].to_string();
  }
  return out.str();
}

GarsideForm GarsideForm::parse(int strands, std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("normal form needs '|'");
  const std::string head = detail::trim(text.substr(0, bar));
  std::string_view exponent;
  if (head.rfind("Δ^", 0) == 0) {
    exponent = std::string_view(head).substr(std::string("Δ^").size());
  } else if (head.rfind("delta^", 0) == 0) {
    exponent = std::string_view(head).substr(6);
  } else {
    throw std::invalid_argument("normal form must start with Δ^m: " + head);
  }
  GarsideForm form;
  form.strands = strands;
  const char* first = exponent.data();
  if (!exponent.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, exponent.data() + exponent.size(), form.delta_power);
  if (ec != std::errc{} || ptr != exponent.data() + exponent.size()) {
    throw std::invalid_argument("malformed Δ exponent: " + head);
  }
  const std::string tail = detail::trim(text.substr(bar + 1));
  if (!tail.empty()) {
    for (const auto& piece : detail::split_top_level(tail, ';')) {
      form.factors.push_back(Permutation::parse(piece));
      const auto& f = form.factors.back();
      if (f.size() != strands) throw std::invalid_argument("factor size differs from strand count");
      if (f.is_identity() || f == Permutation::reversal(strands)) {
        throw std::invalid_argument("identity and Δ are not allowed as factors");
      }
    }
  }
  for (std::size_t t = 0; t + 1 < form.factors.size(); ++t) {
    auto left = to_arrangement(form.factors[t]);
    auto right = to_arrangement(form.factors[t + 1]);
    if (left_weight(left, right)) throw std::invalid_argument("factors are not left-weighted");
  }
  return form;
}

namespace garside {

BraidWord spell_simple(const Permutation& simple) {
  auto a = to_arrangement(simple);
  std::vector<Letter> reversed;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t p = 0; p + 1 < a.size(); ++p) {
      if (a[p] > a[p + 1]) {
        std::swap(a[p], a[p + 1]);
        reversed.push_back({static_cast<int>(p) + 1, 1});
        moved = true;
      }
    }
  }
  return BraidWord(simple.size(), std::vector<Letter>(reversed.rbegin(), reversed.rend()));
}

std::vector<int> finishing_set(const Permutation& simple) {
  std::vector<int> out;
  for (int p = 1; p < simple.size(); ++p) {
    if (simple.image(p) > simple.image(p + 1)) out.push_back(p);
  }
  return out;
}

std::vector<int> starting_set(const Permutation& simple) {
  const auto where = simple.inverse();
  std::vector<int> out;
  for (int s = 1; s < simple.size(); ++s) {
    if (where.image(s) > where.image(s + 1)) out.push_back(s);
  }
  return out;
}

}  // namespace garside

}  // namespace strata
