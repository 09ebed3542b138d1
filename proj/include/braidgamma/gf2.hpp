#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace braidgamma::gf2 {

/// Dense GF(2) vector packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  void set(std::size_t k, bool value = true);
  void flip(std::size_t k) { words_[k / 64] ^= std::uint64_t{1} << (k % 64); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  bool is_zero() const;
  std::size_t popcount() const;
  /// Lowest set index, if any.
  std::optional<std::size_t> first_set() const;
  std::vector<std::size_t> support() const;

  bool operator==(const BitVec&) const = default;
  auto operator<=>(const BitVec& other) const { return words_ <=> other.words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Fully reduced row-echelon basis of a row space. Every pivot column is zero
/// in all other rows, so reduce() returns the unique coset representative.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row; returns false when it was already in the span.
  bool insert(BitVec row);
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t columns_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace braidgamma::gf2
