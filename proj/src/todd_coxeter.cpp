#include "strata/todd_coxeter.hpp"

#include <stdexcept>

namespace strata {

namespace {

constexpr int kUndefined = -1;

int column_of(GenLetter letter) { return 2 * letter.generator + (letter.sign > 0 ? 0 : 1); }

enum class ScanResult { done, blocked };

// Table storage and the coincidence machinery (Holt, Handbook of CGT, §5.1).
// Columns come in pairs: 2g is generator g, 2g+1 its inverse.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap)
      : columns_(2 * p.generator_count()), cap_(cap) {
    for (const auto& r : p.relators()) relators_.push_back(as_columns(r));
    new_coset();
  }

  std::vector<int> as_columns(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (const auto& letter : w) out.push_back(column_of(letter));
    return out;
  }

  std::size_t allocated() const { return forward_.size(); }
  std::size_t alive() const { return alive_; }
  bool is_alive(int c) const { return forward_[c] == c; }
  const std::vector<std::vector<int>>& relators() const { return relators_; }
  int columns() const { return columns_; }
  int entry(int c, int x) const { return table_[static_cast<std::size_t>(c) * columns_ + x]; }

  bool define(int c, int x) {
    const int d = new_coset();
    if (d == kUndefined) return false;
    set(c, x, d);
    set(d, x ^ 1, c);
    return true;
  }

  // HLT scan of `word` from coset c, defining cosets to close gaps.
  ScanResult scan_and_fill(int c, const std::vector<int>& word) {
    if (word.empty()) return ScanResult::done;
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(word.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, word[i]) != kUndefined) f = entry(f, word[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return ScanResult::done;
      }
      while (j >= i && entry(b, word[j] ^ 1) != kUndefined) b = entry(b, word[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return ScanResult::done;
      }
      if (i == j) {
        set(f, word[i], b);
        set(b, word[i] ^ 1, f);
        return ScanResult::done;
      }
      if (!define(f, word[i])) return ScanResult::blocked;
    }
  }

  // Scan without defining: only deductions and coincidences.
  void scan_only(int c, const std::vector<int>& word) {
    if (word.empty()) return;
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(word.size()) - 1;
    while (i <= j && entry(f, word[i]) != kUndefined) f = entry(f, word[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && entry(b, word[j] ^ 1) != kUndefined) b = entry(b, word[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      set(f, word[i], b);
      set(b, word[i] ^ 1, f);
    }
  }

  // Returns the live cosets in order, renumbered 0..n-1, as a flat table.
  std::vector<int> compacted(std::size_t& rows) const {
    std::vector<int> renumber(forward_.size(), kUndefined);
    rows = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (is_alive(static_cast<int>(c))) renumber[c] = static_cast<int>(rows++);
    }
    std::vector<int> out(rows * columns_, kUndefined);
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (renumber[c] == kUndefined) continue;
      for (int x = 0; x < columns_; ++x) {
        const int d = entry(static_cast<int>(c), x);
        out[static_cast<std::size_t>(renumber[c]) * columns_ + x] = d == kUndefined ? kUndefined : renumber[d];
      }
    }
    return out;
  }

 private:
  int new_coset() {
    if (alive_ >= cap_) return kUndefined;
    const int c = static_cast<int>(forward_.size());
    forward_.push_back(c);
    table_.resize(table_.size() + columns_, kUndefined);
    ++alive_;
    return c;
  }

  void set(int c, int x, int d) { table_[static_cast<std::size_t>(c) * columns_ + x] = d; }

  int rep(int c) {
    int root = c;
    while (forward_[root] != root) root = forward_[root];
    while (forward_[c] != root) {
      const int next = forward_[c];
      forward_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    forward_[b] = a;
    --alive_;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int dead = queue_[q];
      for (int x = 0; x < columns_; ++x) {
        const int d = entry(dead, x);
        if (d == kUndefined) continue;
        set(d, x ^ 1, kUndefined);
        const int mu = rep(dead);
        const int nu = rep(d);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x));
        } else if (entry(nu, x ^ 1) != kUndefined) {
          merge(mu, entry(nu, x ^ 1));
        } else {
          set(mu, x, nu);
          set(nu, x ^ 1, mu);
        }
      }
    }
    queue_.clear();
  }

  int columns_;
  std::size_t cap_;
  std::size_t alive_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<int> forward_;
  std::vector<int> table_;
  std::vector<int> queue_;
};

}  // namespace

int CosetTable::act(int coset, GenLetter letter) const {
  if (coset < 0 || static_cast<std::size_t>(coset) >= rows_) return kUndefined;
  return table_[static_cast<std::size_t>(coset) * columns_ + column_of(letter)];
}

int CosetTable::trace(int coset, const Word& w) const {
  for (const auto& letter : w) {
    coset = act(coset, letter);
    if (coset == kUndefined) return kUndefined;
  }
  return coset;
}

bool CosetTable::is_closed_and_consistent() const {
  for (std::size_t c = 0; c < rows_; ++c) {
    for (int x = 0; x < columns_; ++x) {
      const int d = table_[c * columns_ + x];
      if (d == kUndefined) return false;
      if (table_[static_cast<std::size_t>(d) * columns_ + (x ^ 1)] != static_cast<int>(c)) return false;
    }
    for (const auto& r : presentation_.relators()) {
      if (trace(static_cast<int>(c), r) != static_cast<int>(c)) return false;
    }
  }
  for (const auto& h : subgroup_) {
    if (trace(0, h) != 0) return false;
  }
  return true;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets) {
  if (max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
  for (const auto& h : subgroup) {
    for (const auto& letter : h) {
      if (letter.generator < 0 || letter.generator >= p.generator_count()) {
        throw std::invalid_argument("subgroup word references an undeclared generator");
      }
    }
  }

  Enumerator e(p, max_cosets);
  std::vector<std::vector<int>> subgroup_columns;
  for (const auto& h : subgroup) subgroup_columns.push_back(e.as_columns(h));

  // Bounds total allocations when lookahead keeps freeing a few cosets.
  const std::size_t allocation_budget = 16 * max_cosets + 1024;

  const auto lookahead = [&] {
    for (const auto& h : subgroup_columns) e.scan_only(0, h);
    for (std::size_t c = 0; c < e.allocated(); ++c) {
      const int coset = static_cast<int>(c);
      for (const auto& r : e.relators()) {
        if (!e.is_alive(coset)) break;
        e.scan_only(coset, r);
      }
    }
  };
  // Runs `step` until it finishes, making room with lookahead; false = capped.
  const auto with_room = [&](auto&& step) {
    for (;;) {
      if (step()) return true;
      lookahead();
      if (e.alive() >= max_cosets || e.allocated() > allocation_budget) return false;
    }
  };

  bool capped = false;
  capped = !with_room([&] {
    for (const auto& h : subgroup_columns) {
      if (e.scan_and_fill(0, h) == ScanResult::blocked) return false;
    }
    return true;
  });

  for (std::size_t c = 0; !capped && c < e.allocated(); ++c) {
    const int coset = static_cast<int>(c);
    capped = !with_room([&] {
      if (!e.is_alive(coset)) return true;
      for (const auto& r : e.relators()) {
        if (e.scan_and_fill(coset, r) == ScanResult::blocked) return false;
        if (!e.is_alive(coset)) return true;
      }
      for (int x = 0; x < e.columns(); ++x) {
        if (e.entry(coset, x) == kUndefined && !e.define(coset, x)) return false;
      }
      return true;
    });
  }

  CosetTable out;
  out.presentation_ = p;
  out.subgroup_ = subgroup;
  out.columns_ = e.columns();
  out.table_ = e.compacted(out.rows_);
  out.status_ = capped ? EnumerationStatus::capped : EnumerationStatus::complete;
  return out;
}

}  // namespace strata
