#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidgamma/generators.hpp"

namespace braidgamma {

/// Word in the pure braid group on n strands.
struct BraidWord {
  int n = 0;
  std::vector<BraidGen> letters;
  bool operator==(const BraidWord&) const = default;
};

enum class RelationFamily {
  far_commute,    // b_ij b_kl = b_kl b_ij
  triple_first,   // b_ij b_ik b_jk = b_ik b_jk b_ij
  triple_second,  // b_ik b_jk b_ij = b_jk b_ij b_ik
  four_term,      // b_ik b_jk b_jl b_jk = b_jk b_jl b_jk b_ik
};

/// The four-term relation as printed has no inverse on b_jk; the inverted
/// variant (b_ik b_jk b_jl b_jk^-1 = b_jk b_jl b_jk^-1 b_ik) is available for comparison.
enum class FourTermVariant { printed, inverted };

struct RelationInstance {
  RelationFamily family;
  BraidWord lhs;
  BraidWord rhs;
  std::vector<StrandIndex> indices;  // (i,j,k,l) or (i,j,k)
};

std::string to_string(RelationFamily family);

/// Parses `b(i,j)` or `b(i,j)^e` terms separated by whitespace. Throws
/// SyntaxError on malformed text and IndexOutOfRange when i >= j or j > n.
BraidWord parse_braid(std::string_view text, int n);

std::string to_string(const BraidWord& w);

/// Every index instantiation of the defining relations, in a fixed order:
/// far commutation (i<j<k<l, then i<k<l<j), the two triple equalities, the
/// four-term relation; each family in lexicographic order of its indices.
std::vector<RelationInstance> relation_instances(int n, FourTermVariant variant = FourTermVariant::printed);

/// Reversed letters with negated exponents.
BraidWord braid_inverse(BraidWord w);

BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Merges adjacent powers of the same generator and drops zero exponents.
BraidWord free_reduce(BraidWord w);

}  // namespace braidgamma
