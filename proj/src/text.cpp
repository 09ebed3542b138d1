#include "braidgamma/text.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "braidgamma/errors.hpp"

namespace braidgamma {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      throw SyntaxError(std::string("expected '") + c + "'" + found(), pos_);
    }
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw SyntaxError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected integer" + found(), pos_);
    return static_cast<int>(value);
  }

  std::string found() const {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::array<int, 4> four_ints(Scanner& s, char close) {
  std::array<int, 4> v{};
  for (int k = 0; k < 4; ++k) {
    v[k] = s.integer();
    s.expect(k < 3 ? ',' : close);
  }
  return v;
}

template <class Gen>
Gen build(const std::array<int, 4>& v, std::size_t at) {
  try {
    return Gen(v);
  } catch (const Error& e) {
    throw SyntaxError(e.what(), at);
  }
}

enum class Kind { g, gamma, slot };

}  // namespace

AnyWord parse_word(std::string_view text, int r_hint) {
  Scanner s(text);
  std::optional<Kind> kind;
  GWord gw;
  GammaWord dw;
  MultiWord mw;
  int max_slot = -1;

  auto set_kind = [&](Kind k, std::size_t at) {
    if (kind && *kind != k) throw SyntaxError("letters of different groups in one word", at);
    kind = k;
  };

  s.skip_ws();
  while (!s.at_end()) {
    const std::size_t at = s.pos();
    const char c = s.peek();
    if (c == 'a') {
      set_kind(Kind::g, at);
      s.expect('a');
      s.expect('{');
      gw.letters.push_back(build<GGen>(four_ints(s, '}'), at));
    } else if (c == 'd') {
      set_kind(Kind::gamma, at);
      s.expect('d');
      s.expect('(');
      dw.letters.push_back(build<GammaGen>(four_ints(s, ')'), at));
    } else if (c == '[') {
      set_kind(Kind::slot, at);
      s.expect('[');
      const int slot = s.integer();
      s.expect(']');
      const std::size_t gen_at = s.pos();
      s.expect('d');
      s.expect('(');
      mw.letters.push_back(SlotLetter{slot, build<GammaGen>(four_ints(s, ')'), gen_at)});
      if (r_hint > 0 && slot >= r_hint) {
        throw SyntaxError("slot " + std::to_string(slot) + " not below r = " + std::to_string(r_hint), at);
      }
      max_slot = std::max(max_slot, slot);
    } else {
      throw SyntaxError("expected a letter 'a{', 'd(' or '['" + s.found(), at);
    }
    s.skip_ws();
  }

  if (!kind || *kind == Kind::gamma) return dw;
  if (*kind == Kind::g) return gw;
  mw.r = r_hint > 0 ? r_hint : max_slot + 1;
  return mw;
}

GWord parse_g_word(std::string_view text) {
  auto w = parse_word(text);
  if (auto* g = std::get_if<GWord>(&w)) return *g;
  if (auto* d = std::get_if<GammaWord>(&w); d && d->letters.empty()) return GWord{};
  throw SyntaxError("expected a G-word of a{...} letters", 0);
}

GammaWord parse_gamma_word(std::string_view text) {
  auto w = parse_word(text);
  if (auto* d = std::get_if<GammaWord>(&w)) return *d;
  throw SyntaxError("expected a Γ-word of d(...) letters", 0);
}

MultiWord parse_multi_word(std::string_view text, int r) {
  if (r < 1) throw IndexOutOfRange("product width r must be >= 1");
  auto w = parse_word(text, r);
  if (auto* m = std::get_if<MultiWord>(&w)) return *m;
  if (auto* d = std::get_if<GammaWord>(&w); d && d->letters.empty()) return MultiWord{r, {}};
  throw SyntaxError("expected slot-labelled letters [s]d(...)", 0);
}

std::string to_string(const AnyWord& w) {
  return std::visit([](const auto& x) { return to_string(x); }, w);
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace braidgamma
