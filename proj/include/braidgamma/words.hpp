#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidgamma/generators.hpp"
#include "braidgamma/gf2.hpp"

namespace braidgamma {

/// Word over G_n^4. Generators are involutions, so no exponents are stored.
struct GWord {
  std::vector<GGen> letters;
  bool operator==(const GWord&) const = default;
};

/// Word over Γ_n^4, letters in canonical form.
struct GammaWord {
  std::vector<GammaGen> letters;
  bool operator==(const GammaWord&) const = default;
};

struct SlotLetter {
  int slot = 0;
  GammaGen gen;
  bool operator==(const SlotLetter&) const = default;
};

/// Word over the r-fold direct product of Γ_n^4; slot is 0-based.
struct MultiWord {
  int r = 1;
  std::vector<SlotLetter> letters;
  bool operator==(const MultiWord&) const = default;
};

enum class GroupTag { g, gamma, gamma_r };

std::string to_string(GroupTag tag);

GWord concat(const GWord& a, const GWord& b);
GammaWord concat(const GammaWord& a, const GammaWord& b);
MultiWord concat(const MultiWord& a, const MultiWord& b);

/// Deletes adjacent equal letters (equal slot too, for MultiWord) until none
/// remain. A single stack pass yields the same result as any deletion order.
GWord free_reduce(GWord w);
GammaWord free_reduce(GammaWord w);
MultiWord free_reduce(MultiWord w);

GWord invert(GWord w);
GammaWord invert(GammaWord w);
MultiWord invert(MultiWord w);

GWord forget_to_g(const GammaWord& w);
/// Drops slot labels.
GammaWord erase_slots(const MultiWord& w);

/// True iff the two generators commute by the far-commutativity relation,
/// i.e. their supports share fewer than three strands.
bool commutes(const GGen& a, const GGen& b);
bool commutes(const GammaGen& a, const GammaGen& b);
/// Different slots always commute.
bool commutes(const SlotLetter& a, const SlotLetter& b);

/// Best-effort rewriting with involution cancellation and far commutativity.
/// Equal outputs prove group equality; different outputs prove nothing.
GWord commute_normalize(GWord w);
GammaWord commute_normalize(GammaWord w);
MultiWord commute_normalize(MultiWord w);

/// Column order shared by every invariant vector over n strands.
class GeneratorTable {
 public:
  explicit GeneratorTable(int n);

  int n() const { return n_; }
  const std::vector<GammaGen>& gamma_columns() const { return gamma_; }
  const std::vector<GGen>& g_columns() const { return g_; }

  std::size_t column(const GammaGen& gen) const;
  std::size_t column(const GGen& gen) const;

 private:
  int n_;
  std::vector<GammaGen> gamma_;
  std::vector<GGen> g_;
};

/// Shared table for n strands, built once.
const GeneratorTable& generator_table(int n);

/// Rows of the pentagon relation over n strands, one per distinct indicator
/// vector, in order of first appearance over lexicographically ordered 5-tuples.
std::vector<gf2::BitVec> pentagon_rows(int n);

/// Shared, lazily built reduced basis of pentagon_rows(n).
const gf2::EchelonBasis& pentagon_basis(int n);

/// Abelianisation over GF(2) modulo the relation row space. Equal classes are a
/// necessary condition for equality in the group, not a sufficient one.
class InvariantClass {
 public:
  InvariantClass(int n, GroupTag tag, int r, gf2::BitVec coords);

  int n() const { return n_; }
  GroupTag tag() const { return tag_; }
  int r() const { return r_; }
  const gf2::BitVec& coords() const { return coords_; }
  bool is_zero() const { return coords_.is_zero(); }

  /// Printed generators with coefficient one in the reduced representative.
  std::vector<std::string> support_labels() const;

  /// Throws TagMismatch for classes over different groups.
  InvariantClass operator+(const InvariantClass& other) const;
  bool operator==(const InvariantClass& other) const;

 private:
  int n_;
  GroupTag tag_;
  int r_;
  gf2::BitVec coords_;
};

/// Throws IndexOutOfRange when a letter uses a strand above n.
InvariantClass invariant(const GWord& w, int n);
InvariantClass invariant(const GammaWord& w, int n);
InvariantClass invariant(const MultiWord& w, int n);

/// Throws TagMismatch when the classes live in different groups.
bool invariant_equal(const InvariantClass& a, const InvariantClass& b);

template <class Word>
bool invariant_equal(const Word& a, const Word& b, int n) {
  return invariant_equal(invariant(a, n), invariant(b, n));
}

std::string to_string(const GWord& w);
std::string to_string(const GammaWord& w);
std::string to_string(const MultiWord& w);
std::string to_string(const SlotLetter& letter);

}  // namespace braidgamma
