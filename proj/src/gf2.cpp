#include "braidgamma/gf2.hpp"

#include <bit>

#include "braidgamma/errors.hpp"

namespace braidgamma::gf2 {

void BitVec::set(std::size_t k, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (value) {
    words_[k / 64] |= mask;
  } else {
    words_[k / 64] &= ~mask;
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw SizeMismatch("GF(2) vectors of different length");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVec::is_zero() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVec::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::optional<std::size_t> BitVec::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool EchelonBasis::insert(BitVec row) {
  if (row.size() != columns_) throw SizeMismatch("row length does not match basis");
  row = reduce(std::move(row));
  const auto pivot = row.first_set();
  if (!pivot) return false;
  for (auto& existing : rows_) {
    if (existing.get(*pivot)) existing ^= row;
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(*pivot);
  return true;
}

BitVec EchelonBasis::reduce(BitVec v) const {
  if (v.size() != columns_) throw SizeMismatch("vector length does not match basis");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v.get(pivots_[k])) v ^= rows_[k];
  }
  return v;
}

}  // namespace braidgamma::gf2
