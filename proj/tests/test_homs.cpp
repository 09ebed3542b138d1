#include <doctest.h>

#include <map>

#include "braidgamma/errors.hpp"
#include "braidgamma/geom2d.hpp"
#include "braidgamma/homs.hpp"
#include "braidgamma/text.hpp"
#include "support.hpp"

using namespace braidgamma;

namespace {

HomConfig config(int n, Target target = Target::gamma, int r = 1) {
  HomConfig c;
  c.n = n;
  c.target = target;
  c.r = r;
  return c;
}

BraidWord braid(const char* text, int n) { return parse_braid(text, n); }

// Slot from the two-case parity table for two factors.
int parity_table_slot(int p, int q, int i, int j) {
  std::array<int, 3> v{p, q, j};
  std::sort(v.begin(), v.end());
  const bool even = (j + p + q) % 2 == 0;
  const bool first_case = (v[0] < i && i < v[1]) || i > v[2];
  if (first_case) return even ? 0 : 1;
  return even ? 1 : 0;
}

}  // namespace

TEST_CASE("G-valued blocks") {
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(c_word(config(n), i, j).letters.empty());

  // Hand expansion of the three products for n = 5, (i,j) = (1,4): only
  // II(p=1) and III(p=2, q=0 and q=3) survive the validity filter; the block
  // order is II, I, III.
  CHECK(to_string(c_word(config(5), 1, 4)) == "a{1,3,4,5} a{1,2,3,4} a{1,3,4,5} a{1,2,3,4}");

  const std::map<std::pair<int, int>, std::size_t> n4{{{1, 2}, 1}, {{1, 3}, 2}, {{1, 4}, 2},
                                                      {{2, 3}, 0}, {{2, 4}, 2}, {{3, 4}, 1}};
  for (const auto& [ij, len] : n4) CHECK(c_word(config(4), ij.first, ij.second).letters.size() == len);
  const std::map<std::pair<int, int>, std::size_t> n5{{{1, 2}, 4}, {{1, 3}, 6}, {{1, 4}, 4}, {{1, 5}, 5},
                                                      {{2, 3}, 4}, {{2, 4}, 4}, {{2, 5}, 5}, {{3, 4}, 1},
                                                      {{3, 5}, 5}, {{4, 5}, 3}};
  for (const auto& [ij, len] : n5) CHECK(c_word(config(5), ij.first, ij.second).letters.size() == len);

  for (int n = 4; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (const auto& a : c_word(config(n), i, j).letters) {
          CHECK(a.contains(i));
          CHECK(a.contains(j));
        }
  CHECK_THROWS_AS(c_word(config(4), 2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(c_word(config(4), 1, 5), IndexOutOfRange);
}

TEST_CASE("block expansion keeps dummy multiplicity") {
  // II for J = 2, n = 5 repeats its single factor once per value of q.
  const auto specs = block_specs(5, 1, 2, 2);
  const std::size_t ii = 1 * 3;
  REQUIRE(specs.size() >= ii);
  for (std::size_t k = 0; k < ii; ++k) CHECK(specs[k] == LetterSpec{1, 3, 1, 2});
  CHECK_FALSE(specs[0].valid(5));
}

TEST_CASE("Gamma blocks forget to the G blocks") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(forget_to_g(gamma_word(config(n), i, j)) == c_word(config(n), i, j));
        for (auto assembly : {Assembly::swapped, Assembly::doubled}) {
          HomConfig c = config(n);
          c.assembly = assembly;
          const BraidWord b{n, {BraidGen(i, j)}};
          CHECK(invariant(forget_to_g(f(c, b)), n) == invariant(phi(c, b), n));
        }
      }
}

TEST_CASE("empty and cancelling images") {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(phi(config(n, Target::g), BraidWord{n, {BraidGen(i, n)}}).letters.empty());
      CHECK(f(config(n), BraidWord{n, {BraidGen(i, n)}}).letters.empty());
    }
  }
  CHECK(phi(config(5, Target::g), BraidWord{5, {}}).letters.empty());
  CHECK(phi(config(5, Target::g), braid("b(1,2) b(1,2)^-1", 5)).letters.empty());
  CHECK(f(config(5), braid("b(1,2) b(1,2)^-1", 5)).letters.empty());
  CHECK(f_r(config(5, Target::gamma_r, 3), braid("b(2,4)^2 b(2,4)^-2", 5)).letters.empty());

  HomConfig traced = config(5);
  traced.mode = FormulaMode::traced;
  CHECK(f(traced, braid("b(1,2) b(1,2)^-1", 5)).letters.empty());
}

TEST_CASE("inside counts") {
  CHECK(inside_count(2, 4, 7) == 3);
  CHECK(inside_count(1, 2, 3) == 0);
  CHECK(inside_count(3, 5, 9) == 5);
  CHECK(inside_count(7, 2, 4) == 3);

  const int n = 9;
  const auto base = geom2d::base_config(n);
  for (int j = 1; j <= n; ++j)
    for (int p = j + 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        int inside = 0;
        for (int k = 1; k <= n; ++k) {
          if (k == j || k == p || k == q) continue;
          if (geom2d::incircle_sign(base[j - 1], base[p - 1], base[q - 1], base[k - 1]) > 0) ++inside;
        }
        CHECK(inside == inside_count(j, p, q));
      }
}

TEST_CASE("slot selection") {
  CHECK(inside_count(3, 4, 7) == 4);
  CHECK(delta_slot(4, 7, 1, 3, 2) == 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto q = support::random_quad(10);
    CHECK(delta_slot(q[0], q[1], q[2], q[3], 1) == 0);
    const int r = support::uniform(2, 5);
    const int s = delta_slot(q[0], q[1], q[2], q[3], r);
    CHECK(s >= 0);
    CHECK(s < r);
  }
  for (int n = 4; n <= 10; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            if (!all_distinct(p, q, i, j)) continue;
            CHECK(delta_slot(p, q, i, j, 2) == parity_table_slot(p, q, i, j));
          }
}

TEST_CASE("two-factor image of b(1,2)") {
  const MultiWord w = f_r(config(5, Target::gamma_r, 2), braid("b(1,2)", 5), false);
  std::string slots;
  for (const auto& l : w.letters) slots += std::to_string(l.slot);
  CHECK(slots == "00100010");
  CHECK(to_string(erase_slots(w)) == to_string(f(config(5), braid("b(1,2)", 5), false)));
}

TEST_CASE("one factor coincides with the Gamma map") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = support::uniform(2, 6);
    const BraidWord w = support::random_braid(n, support::uniform(0, 6));
    const MultiWord m = f_r(config(n, Target::gamma_r, 1), w, false);
    for (const auto& l : m.letters) CHECK(l.slot == 0);
    CHECK(erase_slots(m) == f(config(n), w, false));
    for (int r = 2; r <= 3; ++r) CHECK(erase_slots(f_r(config(n, Target::gamma_r, r), w, false)) == f(config(n), w, false));
  }
}

TEST_CASE("homomorphism property on relation instances") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& cfg : {config(n, Target::g), config(n), config(n, Target::gamma_r, 2), config(n, Target::gamma_r, 3)}) {
      for (auto variant : {FourTermVariant::printed, FourTermVariant::inverted}) {
        for (const auto& c : check_relations(cfg, variant)) CHECK_MESSAGE(c.pass, to_string(c.instance.lhs));
      }
    }
  }
  CHECK(check_relations(config(2)).empty());
  for (const auto& c : check_relations(config(3))) {
    CHECK(c.pass);
    CHECK(c.lhs_image.empty());
  }
}

TEST_CASE("images of inverses are inverse images") {
  for (int trial = 0; trial < 100; ++trial) {
    const int n = support::uniform(4, 6);
    const BraidWord w = support::random_braid(n, support::uniform(0, 5));
    const BraidWord inv = braid_inverse(w);
    CHECK(phi(config(n, Target::g), inv) == free_reduce(invert(phi(config(n, Target::g), w))));
    CHECK(f(config(n), inv) == free_reduce(invert(f(config(n), w))));
    const auto cfg = config(n, Target::gamma_r, 2);
    CHECK(f_r(cfg, inv) == free_reduce(invert(f_r(cfg, w))));
  }
}

TEST_CASE("assembly patterns") {
  // b(1,2) has no tail, so the two patterns differ only in the middle block.
  HomConfig sw = config(4);
  HomConfig db = config(4);
  db.assembly = Assembly::doubled;
  CHECK(f(sw, braid("b(1,2)", 4), false).letters.size() == f(db, braid("b(1,2)", 4), false).letters.size());
  // Doubling the block makes the image trivial in the abelianisation.
  for (int n = 4; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        db.n = n;
        CHECK(invariant(f(db, BraidWord{n, {BraidGen(i, j)}}), n).is_zero());
      }
  CHECK(to_string(Assembly::swapped) == "swapped");
}

TEST_CASE("configuration checks") {
  CHECK_NOTHROW(config(5).validate());
  CHECK_THROWS_AS(config(0).validate(), ValidationFailed);
  CHECK_THROWS_AS(config(5, Target::gamma, 2).validate(), ValidationFailed);
  CHECK_THROWS_AS(config(5, Target::gamma_r, 0).validate(), ValidationFailed);
  CHECK_THROWS_AS(f(config(4), braid("b(1,5)", 5)), IndexOutOfRange);
  CHECK(std::holds_alternative<GWord>(map_braid(config(4, Target::g), braid("b(1,2)", 4))));
  CHECK(std::holds_alternative<MultiWord>(map_braid(config(4, Target::gamma_r, 2), braid("b(1,2)", 4))));
}

TEST_CASE("traced generator images") {
  HomConfig t = config(4);
  t.mode = FormulaMode::traced;
  const std::map<std::pair<int, int>, std::string> frozen{
      {{1, 2}, "d(1,2,4,3) d(1,2,3,4)"},
      {{1, 3}, "d(1,3,2,4) d(1,2,4,3)"},
      {{1, 4}, "d(1,2,3,4) d(1,3,2,4)"},
      {{2, 3}, "d(1,2,3,4) d(1,3,2,4)"},
      {{2, 4}, "d(1,2,3,4) d(1,2,4,3) d(1,3,2,4) d(1,2,3,4)"},
      {{3, 4}, "d(1,2,4,3) d(1,2,3,4)"},
  };
  for (const auto& [ij, word] : frozen) {
    CHECK(to_string(f(t, BraidWord{4, {BraidGen(ij.first, ij.second)}}, false)) == word);
  }
  // Every traced letter involves the two strands of the generator.
  t.n = 5;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      for (const auto& d : f(t, BraidWord{5, {BraidGen(i, j)}}, false).letters) {
        CHECK((d.subset().contains(i) || d.subset().contains(j)));
      }
}
