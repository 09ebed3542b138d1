#include <doctest.h>

#include <map>

#include "braidgamma/braids.hpp"
#include "braidgamma/errors.hpp"
#include "braidgamma/text.hpp"
#include "support.hpp"

using namespace braidgamma;

namespace {

std::size_t count_family(const std::vector<RelationInstance>& v, RelationFamily f) {
  return std::count_if(v.begin(), v.end(), [f](const RelationInstance& r) { return r.family == f; });
}

// Index patterns of far commutation, counted straight from the inequalities.
std::size_t brute_far_commute(int n) {
  std::size_t count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if ((i < j && j < k && k < l) || (i < k && k < l && l < j)) ++count;
        }
  return count;
}

std::size_t choose(int n, int k) {
  std::size_t r = 1;
  for (int x = 0; x < k; ++x) r = r * (n - x) / (x + 1);
  return r;
}

}  // namespace

TEST_CASE("parsing braid words") {
  const BraidWord w = parse_braid("b(1,3) b(2,4)^-1", 4);
  REQUIRE(w.letters.size() == 2);
  CHECK(w.letters[0] == BraidGen(1, 3, 1));
  CHECK(w.letters[1] == BraidGen(2, 4, -1));
  CHECK(parse_braid("", 3).letters.empty());
  CHECK(parse_braid("  b(1,2)^3\n", 2).letters[0].exponent == 3);

  CHECK_THROWS_AS(parse_braid("b(3,1)", 4), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("b(2,2)", 4), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("b(1,5)", 4), IndexOutOfRange);
  CHECK_THROWS_AS(parse_braid("b(1,2)^0", 4), SyntaxError);
  CHECK_THROWS_AS(parse_braid("b(1,2)b(1,3)", 4), SyntaxError);
  try {
    parse_braid("b(1,2) b(1;3)", 4);
    FAIL("accepted a bad separator");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 10);
  }
}

TEST_CASE("braid print round trip") {
  for (const char* s : {"b(1,3) b(2,4)^-1", "b(1,2)^2  b(3,4)", "\tb(2,3)^-5 ", ""}) {
    CHECK(to_string(parse_braid(s, 4)) == normalize_whitespace(s));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = support::random_braid(6, support::uniform(0, 8), 4);
    CHECK(parse_braid(to_string(w), 6) == w);
  }
}

TEST_CASE("relation instances") {
  const auto n3 = relation_instances(3);
  REQUIRE(n3.size() == 2);
  CHECK(n3[0].family == RelationFamily::triple_first);
  CHECK(n3[1].family == RelationFamily::triple_second);
  CHECK(n3[0].indices == std::vector<StrandIndex>{1, 2, 3});
  CHECK(relation_instances(2).empty());

  const auto n4 = relation_instances(4);
  CHECK(count_family(n4, RelationFamily::far_commute) == 2);
  CHECK(count_family(n4, RelationFamily::far_commute) == brute_far_commute(4));

  for (int n = 3; n <= 8; ++n) {
    const auto all = relation_instances(n);
    CHECK(count_family(all, RelationFamily::far_commute) == brute_far_commute(n));
    CHECK(count_family(all, RelationFamily::triple_first) == choose(n, 3));
    CHECK(count_family(all, RelationFamily::triple_second) == choose(n, 3));
    CHECK(count_family(all, RelationFamily::four_term) == choose(n, 4));
    for (const auto& r : all) {
      CHECK(r.lhs.n == n);
      CHECK(r.rhs.n == n);
      CHECK(r.lhs != r.rhs);
      for (const auto* side : {&r.lhs, &r.rhs}) {
        for (const auto& g : side->letters) CHECK(g.j <= n);
      }
    }
    // Stable order.
    const auto again = relation_instances(n);
    for (std::size_t k = 0; k < all.size(); ++k) CHECK(to_string(all[k].lhs) == to_string(again[k].lhs));
  }
}

TEST_CASE("printed relation texts") {
  const auto n4 = relation_instances(4);
  std::map<RelationFamily, std::vector<std::string>> sides;
  for (const auto& r : n4) sides[r.family].push_back(to_string(r.lhs) + " = " + to_string(r.rhs));
  CHECK(sides[RelationFamily::far_commute][0] == "b(1,2) b(3,4) = b(3,4) b(1,2)");
  CHECK(sides[RelationFamily::far_commute][1] == "b(1,4) b(2,3) = b(2,3) b(1,4)");
  CHECK(sides[RelationFamily::triple_first][0] == "b(1,2) b(1,3) b(2,3) = b(1,3) b(2,3) b(1,2)");
  CHECK(sides[RelationFamily::triple_second][0] == "b(1,3) b(2,3) b(1,2) = b(2,3) b(1,2) b(1,3)");
  CHECK(sides[RelationFamily::four_term][0] == "b(1,3) b(2,3) b(2,4) b(2,3) = b(2,3) b(2,4) b(2,3) b(1,3)");

  const auto inv = relation_instances(4, FourTermVariant::inverted);
  CHECK(to_string(inv.back().lhs) == "b(1,3) b(2,3) b(2,4) b(2,3)^-1");
  CHECK(to_string(inv.back().rhs) == "b(2,3) b(2,4) b(2,3)^-1 b(1,3)");
}

TEST_CASE("braid inverse") {
  CHECK(to_string(braid_inverse(parse_braid("b(1,2)", 2))) == "b(1,2)^-1");
  CHECK(to_string(braid_inverse(parse_braid("b(1,2) b(1,3)^2", 3))) == "b(1,3)^-2 b(1,2)^-1");
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = support::random_braid(5, support::uniform(0, 10));
    CHECK(free_reduce(concat(w, braid_inverse(w))).letters.empty());
    CHECK(braid_inverse(braid_inverse(w)) == w);
  }
  CHECK_THROWS_AS(concat(parse_braid("b(1,2)", 3), parse_braid("b(1,2)", 4)), SizeMismatch);
}
