#include "braidgamma/exact.hpp"

#include <cctype>
#include <cmath>

#include "braidgamma/errors.hpp"

namespace braidgamma {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  std::size_t k = 0;
  if (allow_sign && !s.empty() && s[0] == '-') k = 1;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true)) throw SyntaxError("malformed rational '" + std::string(text) + "'", 0);
  if (!valid_integer(den, false)) {
    throw SyntaxError("malformed rational '" + std::string(text) + "'", slash == std::string_view::npos ? 0 : slash + 1);
  }
  Rat out;
  out.get_num() = mpz_class(std::string(num));
  out.get_den() = mpz_class(std::string(den));
  if (out.get_den() == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'", slash + 1);
  out.canonicalize();
  return out;
}

std::string to_string(const Rat& x) { return x.get_str(); }

int sign(const Rat& x) { return sgn(x); }

double Surd::approx() const { return a.get_d() + b.get_d() * std::sqrt(d.get_d()); }

namespace {

// Sign of b*sqrt(m) + c*sqrt(k) together with helpers for the squared form.
int sign_two_roots(const Rat& b, const Rat& m, const Rat& c, const Rat& k) {
  const int sb = m > 0 ? sgn(b) : 0;
  const int sc = k > 0 ? sgn(c) : 0;
  if (sb == 0) return sc;
  if (sc == 0 || sb == sc) return sb;
  const Rat lhs = b * b * m;
  const Rat rhs = c * c * k;
  if (lhs > rhs) return sb;
  if (lhs < rhs) return sc;
  return 0;
}

int sign_one_root(const Rat& a, const Rat& b, const Rat& m) { return sign_of_sum(a, b, m, 0, 0); }

}  // namespace

int sign_of_sum(const Rat& a, const Rat& b, const Rat& m, const Rat& c, const Rat& k) {
  const int sy = sign_two_roots(b, m, c, k);
  const int sa = sgn(a);
  if (sy == 0) return sa;
  if (sa == 0 || sa == sy) return sy;
  // Opposite signs: compare a^2 with y^2 = b^2 m + c^2 k + 2bc sqrt(mk).
  const Rat e = a * a - b * b * m - c * c * k;
  const Rat f = -2 * b * c;
  int s;
  if (m == 0 || k == 0 || f == 0) {
    s = sgn(e);
  } else {
    s = sign_one_root(e, f, m * k);
  }
  if (s > 0) return sa;
  if (s < 0) return sy;
  return 0;
}

int sign(const Surd& x) { return sign_of_sum(x.a, x.b, x.d, 0, 0); }

int compare(const Surd& x, const Surd& y) { return sign_of_sum(x.a - y.a, x.b, x.d, -y.b, y.d); }

int Poly2::degree() const {
  if (c2 != 0) return 2;
  if (c1 != 0) return 1;
  if (c0 != 0) return 0;
  return -1;
}

int Poly2::sign_at(const Surd& t) const {
  // (a + b r)^2 = a^2 + b^2 d + 2ab r, with r = sqrt(d).
  const Rat sq_a = t.a * t.a + t.b * t.b * t.d;
  const Rat sq_b = 2 * t.a * t.b;
  return sign_of_sum(c0 + c1 * t.a + c2 * sq_a, c1 * t.b + c2 * sq_b, t.d, 0, 0);
}

Poly2 interpolate(const Rat& fm, const Rat& f0, const Rat& fp) {
  Poly2 p;
  p.c0 = f0;
  p.c1 = (fp - fm) / 2;
  p.c2 = (fp + fm) / 2 - f0;
  return p;
}

std::vector<RealRoot> roots_in(const Poly2& p, const Rat& lo, const Rat& hi) {
  std::vector<RealRoot> found;
  const Surd lo_s{lo}, hi_s{hi};
  auto keep = [&](const Surd& x) { return compare(x, lo_s) > 0 && compare(x, hi_s) < 0; };
  switch (p.degree()) {
    case 1: {
      Surd x{-p.c0 / p.c1};
      if (keep(x)) found.push_back({x, true});
      break;
    }
    case 2: {
      const Rat disc = p.c1 * p.c1 - 4 * p.c2 * p.c0;
      const Rat center = -p.c1 / (2 * p.c2);
      if (disc == 0) {
        Surd x{center};
        if (keep(x)) found.push_back({x, false});
      } else if (disc > 0) {
        // sqrt(disc)/(2|c2|) = sqrt(disc / (4 c2^2)).
        const Rat d = disc / (4 * p.c2 * p.c2);
        for (const Surd& x : {Surd{center, -1, d}, Surd{center, 1, d}}) {
          if (keep(x)) found.push_back({x, true});
        }
      }
      break;
    }
    default:
      break;
  }
  return found;
}

Bracket bracket(const Surd& x, Rat lo, Rat hi, const Rat& width) {
  while (hi - lo > width) {
    const Rat mid = (lo + hi) / 2;
    const int c = compare(x, Surd{mid});
    if (c == 0) return {mid, mid};
    if (c < 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace braidgamma
