#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace braidgamma {

/// 1-based strand label. The strand count n lives in context objects.
using StrandIndex = int;

/// b_{ij}^{exponent} with i < j.
struct BraidGen {
  StrandIndex i = 1;
  StrandIndex j = 2;
  int exponent = 1;

  BraidGen() = default;
  BraidGen(StrandIndex i_, StrandIndex j_, int exponent_ = 1);

  auto operator<=>(const BraidGen&) const = default;
};

/// Generator a_{ijkl} of G_n^4: an unordered set of four distinct strands.
class GGen {
 public:
  GGen(StrandIndex a, StrandIndex b, StrandIndex c, StrandIndex d);
  explicit GGen(const std::array<StrandIndex, 4>& members);

  /// Sorted ascending.
  const std::array<StrandIndex, 4>& members() const { return members_; }
  bool contains(StrandIndex k) const;
  StrandIndex max_index() const { return members_[3]; }

  auto operator<=>(const GGen&) const = default;

 private:
  std::array<StrandIndex, 4> members_;
};

/// Generator d_{(ijkl)} of Γ_n^4: a 4-cycle of distinct strands, stored as the
/// canonical representative of its dihedral orbit (rotations and reversal).
/// The representative starts at the minimum and continues toward the smaller
/// of its two cycle neighbours.
class GammaGen {
 public:
  GammaGen(StrandIndex a, StrandIndex b, StrandIndex c, StrandIndex d);
  explicit GammaGen(const std::array<StrandIndex, 4>& cycle);

  const std::array<StrandIndex, 4>& cycle() const { return cycle_; }
  GGen subset() const { return GGen(cycle_); }
  StrandIndex max_index() const;

  auto operator<=>(const GammaGen&) const = default;

 private:
  std::array<StrandIndex, 4> cycle_;
};

/// Canonical representative of the dihedral orbit of `raw`. Throws
/// DuplicateIndex when entries repeat.
GammaGen canonicalize_quad(const std::array<StrandIndex, 4>& raw);

/// The three distinct Γ-generators supported on a 4-subset, sorted by their
/// canonical cycles. Throws SizeMismatch unless `subset` has four distinct entries.
std::vector<GammaGen> quads_of_subset(const std::vector<StrandIndex>& subset);

/// Which of r, s comes first in the printed tuple of d_{p,q,(r,s)_s}.
enum class PivotOrder {
  mover_first,  // (r,s)_s: the table exactly as printed
  pivot_first,  // (s,r)_s: same case split on p,q,s, with r and s transposed
};

/// d_{p,q,(r,s)_s}: six-way case split on the relative order of p, q and the
/// pivot s, with the mover r inserted next to s.
GammaGen select_d(StrandIndex p, StrandIndex q, StrandIndex r, StrandIndex s,
                  PivotOrder order = PivotOrder::mover_first);

/// True when the four values are pairwise distinct.
bool all_distinct(StrandIndex a, StrandIndex b, StrandIndex c, StrandIndex d);

std::string to_string(const BraidGen& g);
std::string to_string(const GGen& g);
std::string to_string(const GammaGen& g);

}  // namespace braidgamma
