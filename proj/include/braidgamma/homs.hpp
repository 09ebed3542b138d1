#pragma once

#include <string>
#include <vector>

#include "braidgamma/braids.hpp"
#include "braidgamma/text.hpp"
#include "braidgamma/words.hpp"

namespace braidgamma {

enum class Target { g, gamma, gamma_r };

/// literal: the product formulas; traced: the event word of the standard
/// generator choreography (see geom2d.hpp).
enum class FormulaMode { literal, traced };

/// How a generator image is assembled from the per-pair blocks.
///  swapped: X_{(i,i+1)} ... X_{(i,j)} X_{(j,i)} X_{(j-1,i)}^-1 ... X_{(i+1,i)}^-1
///  doubled: X_{(i,i+1)} ... X_{(i,j)} X_{(i,j)} X_{(i,j-1)}^-1 ... X_{(i,i+1)}^-1
/// The G-valued map always uses the doubled pattern (its blocks have no orientation).
enum class Assembly { swapped, doubled };

struct HomConfig {
  int n = 4;
  Target target = Target::gamma;
  int r = 1;
  FormulaMode mode = FormulaMode::literal;
  Assembly assembly = Assembly::swapped;

  /// Throws ValidationFailed for n < 1, r < 1, or r != 1 outside Γ^r.
  void validate() const;
};

std::string to_string(Target target);
std::string to_string(FormulaMode mode);
std::string to_string(Assembly assembly);
GroupTag group_tag(Target target);

/// One factor d_{p,q,(mover,pivot)_pivot} of a literal product, before the
/// validity filter.
struct LetterSpec {
  StrandIndex p;
  StrandIndex q;
  StrandIndex mover;
  StrandIndex pivot;

  /// All four indices distinct and inside 1..n.
  bool valid(int n) const;
  GammaGen gamma() const;
  GGen g() const;
  bool operator==(const LetterSpec&) const = default;
};

/// Factors of the block X_{(mover,pivot)} in printed order (II, then I, then
/// III), index ranges expressed through `range_j`. The bound variable that
/// never appears in a factor still multiplies it. Invalid factors are kept so
/// callers can audit the expansion.
std::vector<LetterSpec> block_specs(int n, StrandIndex mover, StrandIndex pivot, StrandIndex range_j);

/// c_{ij}: the G-valued block for the pair, invalid factors dropped, not reduced.
GWord c_word(const HomConfig& cfg, StrandIndex i, StrandIndex j);
/// γ_{i,(i,j)}: the Γ-valued block, invalid factors dropped, not reduced.
GammaWord gamma_word(const HomConfig& cfg, StrandIndex i, StrandIndex j);

/// Factor list of the image of b_{ij}, exponent one, before reduction.
std::vector<LetterSpec> generator_specs(const HomConfig& cfg, StrandIndex i, StrandIndex j);

/// φ_n: PB_n → G_n^4.
GWord phi(const HomConfig& cfg, const BraidWord& w, bool reduce = true);
/// f_n: PB_n → Γ_n^4. Traced mode follows the standard choreography.
GammaWord f(const HomConfig& cfg, const BraidWord& w, bool reduce = true);
/// f^r_n: PB_n → (Γ_n^4)^r with slots from delta_slot (literal) or from the
/// traced inside counts (traced).
MultiWord f_r(const HomConfig& cfg, const BraidWord& w, bool reduce = true);

/// Image under the homomorphism selected by cfg.target.
AnyWord map_braid(const HomConfig& cfg, const BraidWord& w, bool reduce = true);
InvariantClass invariant(const AnyWord& w, int n);

/// min + max - mid - 2 of the three distinct values: the number of base points
/// strictly inside the circle through P_j, P_p, P_q.
int inside_count(StrandIndex j, StrandIndex p, StrandIndex q);

/// Slot of d_{p,q,(i,j)_j} in the r-fold product: inside_count(j,p,q), plus one
/// when i < min or mid < i < max of {p,q,j}, reduced mod r.
int delta_slot(StrandIndex p, StrandIndex q, StrandIndex i, StrandIndex j, int r);

struct RelationCheck {
  std::size_t index = 0;
  RelationInstance instance;
  std::string lhs_image;
  std::string rhs_image;
  bool pass = false;
};

/// Evaluates both sides of every relation instance for cfg.n and compares
/// their invariant classes. Report order follows relation_instances().
std::vector<RelationCheck> check_relations(const HomConfig& cfg,
                                           FourTermVariant variant = FourTermVariant::printed);

}  // namespace braidgamma
