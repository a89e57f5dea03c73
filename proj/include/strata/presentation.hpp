#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// Generator index (0-based, into Presentation::generators()) with a sign.
struct GenLetter {
  int generator = 0;
  int sign = 1;

  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

/// Fully expanded abstract word; no power notation is stored.
using Word = std::vector<GenLetter>;

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word commutator(const Word& x, const Word& y);

/// A finite presentation ⟨generators | relators⟩.
///
/// Text format: `gens: a, b ; rels: a b a B A B, a a`. In words, a token is
/// a generator name, the name with its first letter's case swapped (inverse)
/// or either followed by `^e`. Generator names must start with a letter and
/// may contain brackets, e.g. `a[1,2]` (inverse `A[1,2]`).
class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> generators, std::vector<Word> relators = {});

  static Presentation parse(std::string_view text);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }

  /// -1 if absent.
  int find_generator(std::string_view name) const;

  void add_relator(Word relator);
  /// Adds a generator and returns its index.
  int add_generator(std::string name);

  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;
  std::string to_string() const;

 private:
  void check_word(const Word& w) const;

  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

enum class BuiltinKind {
  artin,               // B_k, (A)_k
  pure_braid,          // PB_k, (YB3)_k and (YB4)_k
  pure_braid_mod_d,    // PB_k with D_k = 1
  braid_mod_delta_sq,  // B_k with Δ_k² = 1
  unordered_top,       // B_m with σ_1² = ... = σ_{m-1}², m = n + 1
};

/// Throws std::invalid_argument for sizes below 2 (1 for unordered_top is
/// also rejected; it needs m = n + 1 >= 2).
Presentation builtin_presentation(BuiltinKind kind, int size);

/// Parses "artin:4", "pure-braid:3", "pure-braid-mod-d:3",
/// "braid-mod-delta2:3", "top:3".
Presentation builtin_presentation(std::string_view spec);

/// Generator index of a[i,j] in pure_braid(k): lexicographic in (i, j).
int pure_generator_index(int i, int j, int k);

/// The relator families on their own, in the presentation's generator
/// numbering (s_i -> i-1, a[i,j] -> pure_generator_index).
std::vector<Word> artin_relators(int k);
std::vector<Word> yb3_relators(int k);
std::vector<Word> yb4_relators(int k);

}  // namespace strata
