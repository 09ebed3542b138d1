#include "braidgamma/braids.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "braidgamma/errors.hpp"

namespace braidgamma {

namespace {

class BraidScanner {
 public:
  explicit BraidScanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'" + found(), pos_);
    ++pos_;
  }

  int integer(bool allow_sign) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const std::size_t digits = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw SyntaxError("integer too large", start);
      ++pos_;
    }
    if (pos_ == digits) throw SyntaxError("expected integer" + found(), pos_);
    return static_cast<int>(negative ? -value : value);
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

BraidWord word(int n, std::initializer_list<BraidGen> letters) { return BraidWord{n, letters}; }

}  // namespace

std::string to_string(RelationFamily family) {
  switch (family) {
    case RelationFamily::far_commute:
      return "1";
    case RelationFamily::triple_first:
      return "2a";
    case RelationFamily::triple_second:
      return "2b";
    case RelationFamily::four_term:
      return "3";
  }
  return "?";
}

BraidWord parse_braid(std::string_view text, int n) {
  BraidScanner s(text);
  BraidWord out{n, {}};
  s.skip_ws();
  while (!s.at_end()) {
    const std::size_t at = s.pos();
    s.expect('b');
    s.expect('(');
    const int i = s.integer(false);
    s.expect(',');
    const int j = s.integer(false);
    s.expect(')');
    int exponent = 1;
    if (s.peek() == '^') {
      s.expect('^');
      const std::size_t exp_at = s.pos();
      exponent = s.integer(true);
      if (exponent == 0) throw SyntaxError("exponent must be nonzero", exp_at);
    }
    if (i < 1 || i >= j) {
      throw IndexOutOfRange("b(" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j at position " +
                            std::to_string(at));
    }
    if (j > n) {
      throw IndexOutOfRange("b(" + std::to_string(i) + "," + std::to_string(j) + ") exceeds n = " +
                            std::to_string(n) + " at position " + std::to_string(at));
    }
    out.letters.emplace_back(i, j, exponent);
    const std::size_t after = s.pos();
    s.skip_ws();
    if (!s.at_end() && s.pos() == after) {
      throw SyntaxError("expected whitespace between terms" + s.found(), s.pos());
    }
  }
  return out;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& g : w.letters) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::vector<RelationInstance> relation_instances(int n, FourTermVariant variant) {
  std::vector<RelationInstance> out;
  auto b = [](int i, int j, int e = 1) { return BraidGen(i, j, e); };

  // Family 1: scan all index quadruples and keep the two printed patterns.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const bool outside = j < k;          // i<j<k<l
          const bool nested = l < j;           // i<k<l<j
          if (!outside && !nested) continue;
          out.push_back({RelationFamily::far_commute, word(n, {b(i, j), b(k, l)}), word(n, {b(k, l), b(i, j)}),
                         {i, j, k, l}});
        }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        out.push_back({RelationFamily::triple_first, word(n, {b(i, j), b(i, k), b(j, k)}),
                       word(n, {b(i, k), b(j, k), b(i, j)}), {i, j, k}});
        out.push_back({RelationFamily::triple_second, word(n, {b(i, k), b(j, k), b(i, j)}),
                       word(n, {b(j, k), b(i, j), b(i, k)}), {i, j, k}});
      }

  const int e = variant == FourTermVariant::printed ? 1 : -1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          out.push_back({RelationFamily::four_term, word(n, {b(i, k), b(j, k), b(j, l), b(j, k, e)}),
                         word(n, {b(j, k), b(j, l), b(j, k, e), b(i, k)}), {i, j, k, l}});
        }
  return out;
}

BraidWord braid_inverse(BraidWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  for (auto& g : w.letters) g.exponent = -g.exponent;
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw SizeMismatch("braid words over different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord free_reduce(BraidWord w) {
  std::vector<BraidGen> out;
  for (const auto& g : w.letters) {
    if (!out.empty() && out.back().i == g.i && out.back().j == g.j) {
      const int sum = out.back().exponent + g.exponent;
      if (sum == 0) {
        out.pop_back();
      } else {
        out.back().exponent = sum;
      }
    } else {
      out.push_back(g);
    }
  }
  w.letters = std::move(out);
  return w;
}

}  // namespace braidgamma
