#include "strata/group_element.hpp"

#include <sstream>
#include <stdexcept>

#include "word_tokens.hpp"

namespace strata {

namespace {

bool sigma_alphabet(GroupTag tag) {
  return tag == GroupTag::symmetric || tag == GroupTag::braid || tag == GroupTag::braid_mod_delta_sq;
}

bool alpha_alphabet(GroupTag tag) { return tag == GroupTag::pure_braid || tag == GroupTag::pure_braid_mod_d; }

bool mod_delta_square(GroupTag tag) {
  return tag == GroupTag::braid_mod_delta_sq || tag == GroupTag::pure_braid_mod_d;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& letter : w) {
    if (!out.empty() && out.back().generator == letter.generator && out.back().sign == -letter.sign) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Word repeat(const Word& w, long exponent) {
  const Word base = exponent < 0 ? inverse(w) : w;
  Word out;
  for (long p = 0; p < std::labs(exponent); ++p) out = concat(out, base);
  return out;
}

Word from_sigma_word(const BraidWord& b) {
  Word out;
  for (const auto& letter : b.letters()) out.push_back({letter.index - 1, letter.sign});
  return out;
}

// Generator index -> (i, j) for the α alphabet of PB_k.
std::vector<std::pair<int, int>> pure_pairs(int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) out.emplace_back(i, j);
  }
  return out;
}

Permutation star_tau(int points, const Word& w) {
  Permutation perm = Permutation::identity(points);
  for (const auto& letter : w) perm = perm.then(Permutation::transposition(points, 1, letter.generator + 2));
  return perm;
}

void require_top_size(int n) {
  if (n < 1) throw std::invalid_argument("central_ext_top needs n >= 1");
}

}  // namespace

std::string CentralExtElement::to_string() const {
  std::ostringstream out;
  out << "T^" << twist << " | " << perm.to_string();
  return out.str();
}

std::string GroupElement::to_string() const {
  struct Visitor {
    std::string operator()(std::monostate) const { return "e"; }
    std::string operator()(long m) const { return "T^" + std::to_string(m); }
    std::string operator()(const Permutation& p) const { return p.to_string(); }
    std::string operator()(const GarsideForm& f) const { return f.to_string(); }
    std::string operator()(const CentralExtElement& c) const { return c.to_string(); }
  };
  return std::visit(Visitor{}, payload);
}

Word parse_group_word(const GroupDescriptor& d, std::string_view text) {
  const Presentation p = d.presentation();
  Word out;
  for (const auto& token : detail::tokenize_word(text)) {
    Word piece;
    if (token.base == "delta" && sigma_alphabet(d.tag)) {
      piece = from_sigma_word(delta_word(d.k));
    } else if (token.base == "D" && alpha_alphabet(d.tag)) {
      for (int j = 2; j <= d.k; ++j) {
        for (int i = 1; i < j; ++i) piece.push_back({pure_generator_index(i, j, d.k), 1});
      }
    } else if (token.base == "T" && d.tag == GroupTag::central_ext_top) {
      piece = Word{{0, 1}, {0, 1}};
    } else {
      out = concat(out, p.parse_word(token.base + "^" + std::to_string(token.exponent)));
      continue;
    }
    out = concat(out, repeat(piece, token.exponent));
  }
  return out;
}

BraidWord to_braid_word(const GroupDescriptor& d, const Word& w) {
  BraidWord out(std::max(d.k, 1));
  if (sigma_alphabet(d.tag)) {
    for (const auto& letter : w) out.push_back({letter.generator + 1, letter.sign});
  } else if (alpha_alphabet(d.tag)) {
    const auto pairs = pure_pairs(d.k);
    for (const auto& letter : w) {
      if (letter.generator < 0 || letter.generator >= static_cast<int>(pairs.size())) {
        throw std::invalid_argument("pure generator index out of range");
      }
      const auto [i, j] = pairs[letter.generator];
      BraidWord a = pure_generator(PureGeneratorId(i, j, d.k));
      out.append(letter.sign > 0 ? a : inverse(a));
    }
  } else if (d.tag == GroupTag::central_ext_top) {
    for (const auto& letter : star_to_artin(w, d.k - 1)) out.push_back({letter.generator + 1, letter.sign});
  } else {
    throw std::invalid_argument("group " + d.name() + " has no braid alphabet");
  }
  return out;
}

GroupElement element_from_word(const GroupDescriptor& d, const Word& w) {
  GroupElement e{d, {}};
  const int gens = d.presentation().generator_count();
  for (const auto& letter : w) {
    if (letter.generator < 0 || letter.generator >= gens) {
      throw std::invalid_argument("word uses a generator outside " + d.name());
    }
  }
  switch (d.tag) {
    case GroupTag::trivial:
      e.payload = std::monostate{};
      break;
    case GroupTag::integers: {
      long m = 0;
      for (const auto& letter : w) m += letter.sign;
      e.payload = m;
      break;
    }
    case GroupTag::symmetric:
      e.payload = permutation_image(to_braid_word(d, w));
      break;
    case GroupTag::braid:
    case GroupTag::pure_braid:
      e.payload = garside_normal_form(to_braid_word(d, w));
      break;
    case GroupTag::braid_mod_delta_sq:
    case GroupTag::pure_braid_mod_d:
      e.payload = reduce_mod_delta_square(garside_normal_form(to_braid_word(d, w)));
      break;
    case GroupTag::central_ext_top: {
      CentralExtElement c;
      c.points = d.k;
      c.perm = star_tau(d.k, w);
      long exponent = 0;
      for (const auto& letter : w) exponent += letter.sign;
      c.twist = (exponent - c.perm.inversions()) / 2;
      e.payload = c;
      break;
    }
  }
  return e;
}

GroupElement element_from_word(const GroupDescriptor& d, std::string_view text) {
  return element_from_word(d, parse_group_word(d, text));
}

bool equal_in_group(const GroupDescriptor& d, const Word& u, const Word& v) {
  if (mod_delta_square(d.tag)) {
    const Word quotient = concat(u, inverse(v));
    element_from_word(d, quotient);  // alphabet check
    return garside_normal_form(to_braid_word(d, quotient)).is_delta_square_power();
  }
  return element_from_word(d, u) == element_from_word(d, v);
}

bool equal_in_group(const GroupDescriptor& d, std::string_view u, std::string_view v) {
  return equal_in_group(d, parse_group_word(d, u), parse_group_word(d, v));
}

Permutation tau(const GroupDescriptor& d, const Word& w) {
  if (d.flavor == Flavor::ordered) throw std::invalid_argument("tau is defined on unordered groups only");
  if (d.tag == GroupTag::central_ext_top) {
    element_from_word(d, w);
    return star_tau(d.k, w);
  }
  return permutation_image(to_braid_word(d, w));
}

Word sigma_prime(int i, int n) {
  require_top_size(n);
  if (i < 1 || i > n) throw std::invalid_argument("sigma_prime index out of range");
  Word conjugator;
  for (int s = 1; s < i; ++s) conjugator.push_back({s - 1, 1});
  return concat(concat(conjugator, Word{{i - 1, 1}}), inverse(conjugator));
}

Presentation star_top_presentation(int n) {
  require_top_size(n);
  std::vector<std::string> names;
  std::vector<Word> primes;
  for (int i = 1; i <= n; ++i) {
    names.push_back("s" + std::to_string(i));
    primes.push_back(sigma_prime(i, n));
  }
  if (n == 1) return Presentation(names);
  Presentation out(names);
  const Presentation artin_top = builtin_presentation(BuiltinKind::unordered_top, n + 1);
  for (const auto& relator : artin_top.relators()) {
    Word image;
    for (const auto& letter : relator) {
      image = concat(image, letter.sign > 0 ? primes[letter.generator] : inverse(primes[letter.generator]));
    }
    out.add_relator(free_reduce(image));
  }
  return out;
}

Word star_to_artin(const Word& w, int n) {
  require_top_size(n);
  // images[i] spells σ_{i+1} in Artin letters.
  std::vector<Word> images;
  Word prefix;
  for (int i = 0; i < n; ++i) {
    images.push_back(free_reduce(concat(concat(inverse(prefix), Word{{i, 1}}), prefix)));
    prefix = free_reduce(concat(prefix, images.back()));
  }
  Word out;
  for (const auto& letter : w) {
    if (letter.generator < 0 || letter.generator >= n) throw std::invalid_argument("generator index out of range");
    out = concat(out, letter.sign > 0 ? images[letter.generator] : inverse(images[letter.generator]));
  }
  return free_reduce(out);
}

}  // namespace strata
