#include "braidgamma/generators.hpp"

#include <algorithm>

#include "braidgamma/errors.hpp"

namespace braidgamma {

namespace {

void require_distinct(const std::array<StrandIndex, 4>& v) {
  if (!all_distinct(v[0], v[1], v[2], v[3])) {
    throw DuplicateIndex("generator indices must be pairwise distinct: (" + std::to_string(v[0]) +
                         "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
                         std::to_string(v[3]) + ")");
  }
}

void require_positive(const std::array<StrandIndex, 4>& v) {
  for (StrandIndex k : v) {
    if (k < 1) throw IndexOutOfRange("strand index must be >= 1, got " + std::to_string(k));
  }
}

}  // namespace

bool all_distinct(StrandIndex a, StrandIndex b, StrandIndex c, StrandIndex d) {
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

BraidGen::BraidGen(StrandIndex i_, StrandIndex j_, int exponent_) : i(i_), j(j_), exponent(exponent_) {
  if (i < 1) throw IndexOutOfRange("braid generator index must be >= 1");
  if (i >= j) {
    throw IndexOutOfRange("braid generator b(" + std::to_string(i) + "," + std::to_string(j) +
                          ") needs i < j");
  }
  if (exponent == 0) throw IndexOutOfRange("braid generator exponent must be nonzero");
}

GGen::GGen(StrandIndex a, StrandIndex b, StrandIndex c, StrandIndex d) : GGen(std::array<StrandIndex, 4>{a, b, c, d}) {}

GGen::GGen(const std::array<StrandIndex, 4>& members) : members_(members) {
  require_distinct(members_);
  require_positive(members_);
  std::sort(members_.begin(), members_.end());
}

bool GGen::contains(StrandIndex k) const {
  return std::find(members_.begin(), members_.end(), k) != members_.end();
}

GammaGen::GammaGen(StrandIndex a, StrandIndex b, StrandIndex c, StrandIndex d)
    : GammaGen(std::array<StrandIndex, 4>{a, b, c, d}) {}

GammaGen::GammaGen(const std::array<StrandIndex, 4>& cycle) {
  require_distinct(cycle);
  require_positive(cycle);
  const auto first = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
  const StrandIndex next = cycle[(first + 1) % 4];
  const StrandIndex prev = cycle[(first + 3) % 4];
  const int step = next < prev ? 1 : 3;
  for (int k = 0; k < 4; ++k) cycle_[k] = cycle[(first + step * k) % 4];
}

StrandIndex GammaGen::max_index() const { return *std::max_element(cycle_.begin(), cycle_.end()); }

GammaGen canonicalize_quad(const std::array<StrandIndex, 4>& raw) { return GammaGen(raw); }

std::vector<GammaGen> quads_of_subset(const std::vector<StrandIndex>& subset) {
  if (subset.size() != 4) {
    throw SizeMismatch("a 4-subset is required, got " + std::to_string(subset.size()) + " indices");
  }
  std::array<StrandIndex, 4> s{subset[0], subset[1], subset[2], subset[3]};
  std::sort(s.begin(), s.end());
  require_distinct(s);
  // The smallest element is adjacent to exactly two of the other three; the
  // remaining one sits opposite it. Each choice of opposite gives one class.
  std::vector<GammaGen> out{GammaGen(s[0], s[1], s[2], s[3]), GammaGen(s[0], s[1], s[3], s[2]),
                            GammaGen(s[0], s[2], s[1], s[3])};
  std::sort(out.begin(), out.end());
  return out;
}

GammaGen select_d(StrandIndex p, StrandIndex q, StrandIndex r, StrandIndex s, PivotOrder order) {
  if (!all_distinct(p, q, r, s)) {
    throw DuplicateIndex("select_d needs distinct p,q,r,s");
  }
  // Printed tuples use the pair (r,s); the pivot-first variant writes (s,r).
  const StrandIndex x = order == PivotOrder::mover_first ? r : s;
  const StrandIndex y = order == PivotOrder::mover_first ? s : r;
  if (p < q && q < s) return GammaGen(p, q, x, y);
  if (p < s && s < q) return GammaGen(p, x, y, q);
  if (s < p && p < q) return GammaGen(x, y, p, q);
  if (q < p && p < s) return GammaGen(q, p, x, y);
  if (q < s && s < p) return GammaGen(q, x, y, p);
  return GammaGen(x, y, q, p);  // s < q < p
}

std::string to_string(const BraidGen& g) {
  std::string out = "b(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
  if (g.exponent != 1) out += "^" + std::to_string(g.exponent);
  return out;
}

std::string to_string(const GGen& g) {
  const auto& m = g.members();
  return "a{" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + "," +
         std::to_string(m[3]) + "}";
}

std::string to_string(const GammaGen& g) {
  const auto& c = g.cycle();
  return "d(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
         std::to_string(c[3]) + ")";
}

}  // namespace braidgamma
