#pragma once

// Seeded generators shared by the property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "braidgamma/braids.hpp"
#include "braidgamma/exact.hpp"
#include "braidgamma/words.hpp"

namespace support {

using braidgamma::Rat;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240917u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// mpq_class(num, den) leaves the fraction unreduced.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat small_rat(int range = 20, int max_den = 7) {
  return frac(uniform(-range * max_den, range * max_den), uniform(1, max_den));
}

/// Four distinct values in 1..n, in random order.
inline std::array<int, 4> random_quad(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng());
  return {all[0], all[1], all[2], all[3]};
}

inline braidgamma::GammaWord random_gamma_word(int n, int length) {
  braidgamma::GammaWord w;
  for (int k = 0; k < length; ++k) w.letters.emplace_back(random_quad(n));
  return w;
}

inline braidgamma::GWord random_g_word(int n, int length) {
  braidgamma::GWord w;
  for (int k = 0; k < length; ++k) w.letters.emplace_back(random_quad(n));
  return w;
}

inline braidgamma::MultiWord random_multi_word(int n, int r, int length) {
  braidgamma::MultiWord w{r, {}};
  for (int k = 0; k < length; ++k) w.letters.push_back({uniform(0, r - 1), braidgamma::GammaGen(random_quad(n))});
  return w;
}

inline braidgamma::BraidWord random_braid(int n, int length, int max_exp = 2) {
  braidgamma::BraidWord w{n, {}};
  for (int k = 0; k < length; ++k) {
    const int i = uniform(1, n - 1);
    const int j = uniform(i + 1, n);
    int e = uniform(1, max_exp);
    if (uniform(0, 1) == 1) e = -e;
    w.letters.emplace_back(i, j, e);
  }
  return w;
}

}  // namespace support
