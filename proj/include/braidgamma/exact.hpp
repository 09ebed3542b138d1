#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace braidgamma {

/// Arbitrary-precision rational, always canonical.
using Rat = mpq_class;

/// Reads "p/q" or "p". Throws SyntaxError on malformed input or q <= 0.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& x);
int sign(const Rat& x);

/// Exact real number a + b*sqrt(d) with d >= 0.
struct Surd {
  Rat a;
  Rat b = 0;
  Rat d = 0;

  double approx() const;
};

int sign(const Surd& x);
/// Sign of x - y.
int compare(const Surd& x, const Surd& y);
/// Sign of a + b*sqrt(m) + c*sqrt(k), for m, k >= 0.
int sign_of_sum(const Rat& a, const Rat& b, const Rat& m, const Rat& c, const Rat& k);

/// c0 + c1 t + c2 t^2.
struct Poly2 {
  Rat c0 = 0;
  Rat c1 = 0;
  Rat c2 = 0;

  Rat operator()(const Rat& t) const { return c0 + t * (c1 + t * c2); }
  bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
  int degree() const;
  /// Sign of the polynomial at an exact point.
  int sign_at(const Surd& t) const;
};

/// Fits the unique polynomial of degree <= 2 through (-1, fm), (0, f0), (1, fp).
Poly2 interpolate(const Rat& fm, const Rat& f0, const Rat& fp);

struct RealRoot {
  Surd value;
  bool simple = true;  // false for a double root (no sign change)
};

/// Real roots inside the open interval (lo, hi), ascending. The zero polynomial has none.
std::vector<RealRoot> roots_in(const Poly2& p, const Rat& lo, const Rat& hi);

/// Rational interval [lo, hi] containing x with hi - lo <= width.
struct Bracket {
  Rat lo;
  Rat hi;
};
Bracket bracket(const Surd& x, Rat lo, Rat hi, const Rat& width);

}  // namespace braidgamma
