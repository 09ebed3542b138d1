#include "braidgamma/words.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "braidgamma/errors.hpp"

namespace braidgamma {

namespace {

template <class Letter>
std::vector<Letter> stack_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& x : letters) {
    if (!out.empty() && out.back() == x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

int shared_strands(const GGen& a, const GGen& b) {
  int count = 0;
  for (StrandIndex k : a.members()) count += b.contains(k) ? 1 : 0;
  return count;
}

bool letter_less(const GGen& a, const GGen& b) { return a < b; }
bool letter_less(const GammaGen& a, const GammaGen& b) { return a < b; }
bool letter_less(const SlotLetter& a, const SlotLetter& b) {
  if (a.slot != b.slot) return a.slot < b.slot;
  return a.gen < b.gen;
}

// Cancel x ... x when every letter in between commutes with x; then bubble
// commuting neighbours into ascending order. Leftmost rewrite wins. Each
// rewrite shortens the word or removes an inversion, so the loop terminates.
template <class Letter>
std::vector<Letter> normalize_letters(std::vector<Letter> w) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t k = i + 1; k < w.size(); ++k) {
        if (w[k] == w[i]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commutes(w[k], w[i])) break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (letter_less(w[i + 1], w[i]) && commutes(w[i], w[i + 1])) {
        std::swap(w[i], w[i + 1]);
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

void require_in_range(StrandIndex max_index, int n) {
  if (max_index > n) {
    throw IndexOutOfRange("letter uses strand " + std::to_string(max_index) + " but n = " +
                          std::to_string(n));
  }
}

std::size_t gamma_width(int n) { return generator_table(n).gamma_columns().size(); }

gf2::BitVec reduce_blocks(const gf2::BitVec& v, int n, int r) {
  const auto& basis = pentagon_basis(n);
  const std::size_t m = gamma_width(n);
  gf2::BitVec out(v.size());
  for (int s = 0; s < r; ++s) {
    gf2::BitVec block(m);
    for (std::size_t c = 0; c < m; ++c) block.set(c, v.get(s * m + c));
    block = basis.reduce(std::move(block));
    for (std::size_t c : block.support()) out.set(s * m + c);
  }
  return out;
}

}  // namespace

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::g:
      return "g";
    case GroupTag::gamma:
      return "gamma";
    case GroupTag::gamma_r:
      return "gammar";
  }
  return "?";
}

GWord concat(const GWord& a, const GWord& b) {
  GWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

GammaWord concat(const GammaWord& a, const GammaWord& b) {
  GammaWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

MultiWord concat(const MultiWord& a, const MultiWord& b) {
  if (a.r != b.r) throw TagMismatch("cannot concatenate words over different products");
  MultiWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

GWord free_reduce(GWord w) { return GWord{stack_reduce(w.letters)}; }
GammaWord free_reduce(GammaWord w) { return GammaWord{stack_reduce(w.letters)}; }
MultiWord free_reduce(MultiWord w) { return MultiWord{w.r, stack_reduce(w.letters)}; }

GWord invert(GWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

GammaWord invert(GammaWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

MultiWord invert(MultiWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

GWord forget_to_g(const GammaWord& w) {
  GWord out;
  out.letters.reserve(w.letters.size());
  for (const auto& d : w.letters) out.letters.push_back(d.subset());
  return out;
}

GammaWord erase_slots(const MultiWord& w) {
  GammaWord out;
  out.letters.reserve(w.letters.size());
  for (const auto& x : w.letters) out.letters.push_back(x.gen);
  return out;
}

bool commutes(const GGen& a, const GGen& b) { return shared_strands(a, b) < 3; }
bool commutes(const GammaGen& a, const GammaGen& b) { return shared_strands(a.subset(), b.subset()) < 3; }
bool commutes(const SlotLetter& a, const SlotLetter& b) {
  return a.slot != b.slot || commutes(a.gen, b.gen);
}

GWord commute_normalize(GWord w) { return GWord{normalize_letters(std::move(w.letters))}; }
GammaWord commute_normalize(GammaWord w) { return GammaWord{normalize_letters(std::move(w.letters))}; }
MultiWord commute_normalize(MultiWord w) { return MultiWord{w.r, normalize_letters(std::move(w.letters))}; }

GeneratorTable::GeneratorTable(int n) : n_(n) {
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          g_.emplace_back(a, b, c, d);
          for (const auto& q : quads_of_subset({a, b, c, d})) gamma_.push_back(q);
        }
  std::sort(gamma_.begin(), gamma_.end());
}

std::size_t GeneratorTable::column(const GammaGen& gen) const {
  auto it = std::lower_bound(gamma_.begin(), gamma_.end(), gen);
  if (it == gamma_.end() || *it != gen) {
    throw IndexOutOfRange(to_string(gen) + " is not a generator for n = " + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - gamma_.begin());
}

std::size_t GeneratorTable::column(const GGen& gen) const {
  auto it = std::lower_bound(g_.begin(), g_.end(), gen);
  if (it == g_.end() || *it != gen) {
    throw IndexOutOfRange(to_string(gen) + " is not a generator for n = " + std::to_string(n_));
  }
  return static_cast<std::size_t>(it - g_.begin());
}

const GeneratorTable& generator_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GeneratorTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GeneratorTable>(n);
  return *slot;
}

std::vector<gf2::BitVec> pentagon_rows(int n) {
  std::vector<gf2::BitVec> rows;
  if (n < 5) return rows;
  const auto& table = generator_table(n);
  const std::size_t m = table.gamma_columns().size();
  std::vector<gf2::BitVec> seen;  // kept sorted for dedup
  std::array<int, 5> t{};
  // All ordered 5-tuples of distinct strands, in lexicographic order.
  auto visit = [&](auto&& self, int depth) -> void {
    if (depth == 5) {
      const auto [i, j, k, l, mm] = t;
      gf2::BitVec row(m);
      for (const auto& q : {GammaGen(i, j, k, l), GammaGen(i, j, k, mm), GammaGen(i, j, l, mm),
                            GammaGen(i, k, l, mm), GammaGen(j, k, l, mm)}) {
        row.flip(table.column(q));
      }
      auto it = std::lower_bound(seen.begin(), seen.end(), row);
      if (it == seen.end() || *it != row) {
        seen.insert(it, row);
        rows.push_back(std::move(row));
      }
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (std::find(t.begin(), t.begin() + depth, v) != t.begin() + depth) continue;
      t[depth] = v;
      self(self, depth + 1);
    }
  };
  visit(visit, 0);
  return rows;
}

const gf2::EchelonBasis& pentagon_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<gf2::EchelonBasis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto basis = std::make_unique<gf2::EchelonBasis>(n >= 4 ? gamma_width(n) : 0);
  for (auto& row : pentagon_rows(n)) basis->insert(std::move(row));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(basis));
  return *it->second;
}

InvariantClass::InvariantClass(int n, GroupTag tag, int r, gf2::BitVec coords)
    : n_(n), tag_(tag), r_(r), coords_(std::move(coords)) {}

std::vector<std::string> InvariantClass::support_labels() const {
  std::vector<std::string> out;
  const auto& table = generator_table(n_);
  const std::size_t m = table.gamma_columns().size();
  for (std::size_t c : coords_.support()) {
    switch (tag_) {
      case GroupTag::g:
        out.push_back(to_string(table.g_columns()[c]));
        break;
      case GroupTag::gamma:
        out.push_back(to_string(table.gamma_columns()[c]));
        break;
      case GroupTag::gamma_r:
        out.push_back("[" + std::to_string(c / m) + "]" + to_string(table.gamma_columns()[c % m]));
        break;
    }
  }
  return out;
}

InvariantClass InvariantClass::operator+(const InvariantClass& other) const {
  if (n_ != other.n_ || tag_ != other.tag_ || r_ != other.r_) {
    throw TagMismatch("cannot add invariant classes over different groups");
  }
  // A sum of reduced representatives is reduced: the pivot columns stay zero.
  return InvariantClass(n_, tag_, r_, coords_ ^ other.coords_);
}

bool InvariantClass::operator==(const InvariantClass& other) const {
  return n_ == other.n_ && tag_ == other.tag_ && r_ == other.r_ && coords_ == other.coords_;
}

InvariantClass invariant(const GWord& w, int n) {
  const auto& table = generator_table(n);
  gf2::BitVec v(table.g_columns().size());
  for (const auto& a : w.letters) {
    require_in_range(a.max_index(), n);
    v.flip(table.column(a));
  }
  // The squared five-term relation abelianises to zero: no quotient.
  return InvariantClass(n, GroupTag::g, 1, std::move(v));
}

InvariantClass invariant(const GammaWord& w, int n) {
  const auto& table = generator_table(n);
  gf2::BitVec v(table.gamma_columns().size());
  for (const auto& d : w.letters) {
    require_in_range(d.max_index(), n);
    v.flip(table.column(d));
  }
  return InvariantClass(n, GroupTag::gamma, 1, pentagon_basis(n).reduce(std::move(v)));
}

InvariantClass invariant(const MultiWord& w, int n) {
  if (w.r < 1) throw IndexOutOfRange("product width r must be >= 1");
  const auto& table = generator_table(n);
  const std::size_t m = table.gamma_columns().size();
  gf2::BitVec v(m * static_cast<std::size_t>(w.r));
  for (const auto& x : w.letters) {
    if (x.slot < 0 || x.slot >= w.r) {
      throw IndexOutOfRange("slot " + std::to_string(x.slot) + " outside 0.." + std::to_string(w.r - 1));
    }
    require_in_range(x.gen.max_index(), n);
    v.flip(static_cast<std::size_t>(x.slot) * m + table.column(x.gen));
  }
  return InvariantClass(n, GroupTag::gamma_r, w.r, reduce_blocks(v, n, w.r));
}

bool invariant_equal(const InvariantClass& a, const InvariantClass& b) {
  if (a.n() != b.n() || a.tag() != b.tag() || a.r() != b.r()) {
    throw TagMismatch("invariant classes over different groups: " + to_string(a.tag()) + " vs " +
                      to_string(b.tag()));
  }
  return a == b;
}

namespace {

template <class Word>
std::string join_letters(const Word& w) {
  std::string out;
  for (const auto& x : w.letters) {
    if (!out.empty()) out += ' ';
    out += to_string(x);
  }
  return out;
}

}  // namespace

std::string to_string(const SlotLetter& letter) {
  return "[" + std::to_string(letter.slot) + "]" + to_string(letter.gen);
}

std::string to_string(const GWord& w) { return join_letters(w); }
std::string to_string(const GammaWord& w) { return join_letters(w); }
std::string to_string(const MultiWord& w) { return join_letters(w); }

}  // namespace braidgamma
