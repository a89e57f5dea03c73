#include "strata/presentation.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "strata/braid_word.hpp"
#include "word_tokens.hpp"

namespace strata {

namespace {

std::string swap_first_case(std::string_view name) {
  std::string out(name);
  if (!out.empty()) {
    const auto c = static_cast<unsigned char>(out[0]);
    out[0] = static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c));
  }
  return out;
}

Word from_braid(const BraidWord& w) {
  Word out;
  out.reserve(w.length());
  for (const auto& letter : w.letters()) out.push_back({letter.index - 1, letter.sign});
  return out;
}

Word pure_letter(int i, int j, int k, int sign = 1) {
  return Word{{pure_generator_index(i, j, k), sign}};
}

Word pure_product(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& part : parts) out = concat(out, part);
  return out;
}

}  // namespace

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& letter : out) letter.sign = -letter.sign;
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word commutator(const Word& x, const Word& y) {
  return concat(concat(x, y), concat(inverse(x), inverse(y)));
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    const auto& name = generators_[a];
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      throw std::invalid_argument("generator names must start with a letter: '" + name + "'");
    }
    const auto bracket = name.find('[');
    if (name.find_first_of(" \t\n^;") != std::string::npos ||
        name.substr(0, bracket).find(',') != std::string::npos) {
      throw std::invalid_argument("generator name contains a reserved character: '" + name + "'");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (generators_[b] == name || generators_[b] == swap_first_case(name)) {
        throw std::invalid_argument("ambiguous generator names: '" + generators_[b] + "', '" + name + "'");
      }
    }
  }
  for (auto& relator : relators) add_relator(std::move(relator));
}

int Presentation::add_generator(std::string name) {
  auto names = generators_;
  names.push_back(std::move(name));
  *this = Presentation(std::move(names), relators_);
  return generator_count() - 1;
}

void Presentation::check_word(const Word& w) const {
  for (const auto& letter : w) {
    if (letter.generator < 0 || letter.generator >= generator_count() ||
        (letter.sign != 1 && letter.sign != -1)) {
      throw std::invalid_argument("word references an undeclared generator");
    }
  }
}

void Presentation::add_relator(Word relator) {
  check_word(relator);
  relators_.push_back(std::move(relator));
}

int Presentation::find_generator(std::string_view name) const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    if (generators_[a] == name) return static_cast<int>(a);
  }
  return -1;
}

Word Presentation::parse_word(std::string_view text) const {
  Word out;
  for (const auto& token : detail::tokenize_word(text)) {
    int generator = find_generator(token.base);
    int sign = 1;
    if (generator < 0) {
      generator = find_generator(swap_first_case(token.base));
      sign = -1;
    }
    if (generator < 0) {
      if (token.base == "e" || token.base == "1") continue;
      throw std::invalid_argument("unknown generator '" + token.base + "'");
    }
    const int s = token.exponent < 0 ? -sign : sign;
    for (long p = 0; p < std::labs(token.exponent); ++p) out.push_back({generator, s});
  }
  return out;
}

std::string Presentation::format_word(const Word& w) const {
  check_word(w);
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p) out << ' ';
    const auto& name = generators_[w[p].generator];
    out << (w[p].sign > 0 ? name : swap_first_case(name));
  }
  return out.str();
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << "gens: ";
  for (std::size_t a = 0; a < generators_.size(); ++a) out << (a ? ", " : "") << generators_[a];
  out << " ; rels: ";
  for (std::size_t r = 0; r < relators_.size(); ++r) out << (r ? ", " : "") << format_word(relators_[r]);
  return out.str();
}

Presentation Presentation::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::string> relator_texts;
  bool saw_gens = false;
  for (const auto& section : detail::split_top_level(text, ';')) {
    if (section.empty()) continue;
    const auto colon = section.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("section without ':' in presentation");
    const auto key = detail::trim(std::string_view(section).substr(0, colon));
    const auto body = detail::trim(std::string_view(section).substr(colon + 1));
    std::vector<std::string> items;
    if (!body.empty()) items = detail::split_top_level(body, ',');
    if (key == "gens") {
      saw_gens = true;
      for (auto& item : items) {
        if (item.empty()) throw std::invalid_argument("empty generator name");
        names.push_back(std::move(item));
      }
    } else if (key == "rels") {
      for (auto& item : items) relator_texts.push_back(std::move(item));
    } else {
      throw std::invalid_argument("unknown presentation section '" + key + "'");
    }
  }
  if (!saw_gens) throw std::invalid_argument("presentation needs a 'gens:' section");
  Presentation p(std::move(names));
  for (const auto& r : relator_texts) p.add_relator(p.parse_word(r));
  return p;
}

int pure_generator_index(int i, int j, int k) {
  if (!(1 <= i && i < j && j <= k)) throw std::invalid_argument("pure generator index out of range");
  // Pairs (i', j') with i' < i come first: sum over i' of (k - i').
  int index = 0;
  for (int a = 1; a < i; ++a) index += k - a;
  return index + (j - i - 1);
}

std::vector<Word> artin_relators(int k) {
  std::vector<Word> out;
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = i + 2; j <= k - 1; ++j) {
      out.push_back(commutator(Word{{i - 1, 1}}, Word{{j - 1, 1}}));
    }
  }
  for (int i = 1; i + 1 <= k - 1; ++i) {
    const Word a{{i - 1, 1}};
    const Word b{{i, 1}};
    out.push_back(concat(concat(concat(a, b), a), inverse(concat(concat(b, a), b))));
  }
  return out;
}

std::vector<Word> yb3_relators(int k) {
  std::vector<Word> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int l = j + 1; l <= k; ++l) {
        const Word first = pure_product({pure_letter(i, j, k), pure_letter(i, l, k), pure_letter(j, l, k)});
        const Word second = pure_product({pure_letter(i, l, k), pure_letter(j, l, k), pure_letter(i, j, k)});
        const Word third = pure_product({pure_letter(j, l, k), pure_letter(i, j, k), pure_letter(i, l, k)});
        out.push_back(concat(first, inverse(second)));
        out.push_back(concat(second, inverse(third)));
      }
    }
  }
  return out;
}

std::vector<Word> yb4_relators(int k) {
  std::vector<Word> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      for (int m = j + 1; m <= k; ++m) {
        for (int l = m + 1; l <= k; ++l) {
          // m plays the role of the third index.
          const auto a = [k](int x, int y, int sign = 1) { return pure_letter(x, y, k, sign); };
          out.push_back(commutator(a(m, l), a(i, j)));
          out.push_back(commutator(a(i, l), a(j, m)));
          out.push_back(commutator(a(j, l), pure_product({a(j, m, -1), a(i, m), a(j, m)})));
          out.push_back(commutator(a(j, l), pure_product({a(m, l), a(i, m), a(m, l, -1)})));
        }
      }
    }
  }
  return out;
}

Presentation builtin_presentation(BuiltinKind kind, int size) {
  if (size < 2) throw std::invalid_argument("builtin presentations need size >= 2");
  const int k = size;
  std::vector<std::string> sigma_names;
  for (int i = 1; i <= k - 1; ++i) sigma_names.push_back("s" + std::to_string(i));
  std::vector<std::string> alpha_names;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      alpha_names.push_back("a[" + std::to_string(i) + "," + std::to_string(j) + "]");
    }
  }

  switch (kind) {
    case BuiltinKind::artin:
      return Presentation(sigma_names, artin_relators(k));
    case BuiltinKind::braid_mod_delta_sq: {
      Presentation p(sigma_names, artin_relators(k));
      p.add_relator(from_braid(power(delta_word(k), 2)));
      return p;
    }
    case BuiltinKind::unordered_top: {
      Presentation p(sigma_names, artin_relators(k));
      for (int i = 1; i + 1 <= k - 1; ++i) {
        p.add_relator(Word{{i - 1, 1}, {i - 1, 1}, {i, -1}, {i, -1}});
      }
      return p;
    }
    case BuiltinKind::pure_braid:
    case BuiltinKind::pure_braid_mod_d: {
      Presentation p(alpha_names, yb3_relators(k));
      for (auto& r : yb4_relators(k)) p.add_relator(std::move(r));
      if (kind == BuiltinKind::pure_braid_mod_d) {
        Word d;
        for (int j = 2; j <= k; ++j) {
          for (int i = 1; i < j; ++i) d.push_back({pure_generator_index(i, j, k), 1});
        }
        p.add_relator(std::move(d));
      }
      return p;
    }
  }
  throw std::invalid_argument("unknown builtin presentation");
}

Presentation builtin_presentation(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("builtin spec must look like name:size");
  const auto name = detail::trim(spec.substr(0, colon));
  const auto size_text = detail::trim(spec.substr(colon + 1));
  char* end = nullptr;
  const long size = std::strtol(size_text.c_str(), &end, 10);
  if (size_text.empty() || *end != '\0') throw std::invalid_argument("malformed builtin size: " + size_text);
  if (name == "artin") return builtin_presentation(BuiltinKind::artin, static_cast<int>(size));
  if (name == "pure-braid") return builtin_presentation(BuiltinKind::pure_braid, static_cast<int>(size));
  if (name == "pure-braid-mod-d") return builtin_presentation(BuiltinKind::pure_braid_mod_d, static_cast<int>(size));
  if (name == "braid-mod-delta2") return builtin_presentation(BuiltinKind::braid_mod_delta_sq, static_cast<int>(size));
  if (name == "top") return builtin_presentation(BuiltinKind::unordered_top, static_cast<int>(size));
  throw std::invalid_argument("unknown builtin presentation '" + name + "'");
}

}  // namespace strata
