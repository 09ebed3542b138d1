#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidgamma/exact.hpp"
#include "braidgamma/generators.hpp"
#include "braidgamma/words.hpp"

namespace braidgamma::geom3d {

struct Pt3 {
  Rat x;
  Rat y;
  Rat z;
  bool operator==(const Pt3&) const = default;
};

/// Determinant with rows (x, y, z, 1); zero iff the points are coplanar.
Rat orient3d_det(const Pt3& a, const Pt3& b, const Pt3& c, const Pt3& d);
int orient3d_sign(const Pt3& a, const Pt3& b, const Pt3& c, const Pt3& d);

struct Move3 {
  StrandIndex point;  // 1-based
  Pt3 to;
  bool operator==(const Move3&) const = default;
};

struct Choreo3 {
  int n = 0;
  std::vector<Pt3> start;
  std::vector<Move3> moves;
  bool loop = false;
  bool operator==(const Choreo3&) const = default;
};

std::vector<Pt3> positions_after(const Choreo3& ch, std::size_t k);
std::vector<Pt3> positions_at(const Choreo3& ch, const Rat& t);

/// ValidationFailed for malformed input; at every segment endpoint,
/// CollinearTriple when three points are collinear and Degenerate when two
/// coincide or four are coplanar.
void validate(const Choreo3& ch);

/// Coplanarity of one 4-tuple while its mover crosses the plane of the other three.
struct Event3 {
  int segment = 0;
  Rat time;  // local, in (0,1)
  StrandIndex mover = 0;
  GGen subset{1, 2, 3, 4};
  std::optional<GammaGen> quad;  // cyclic order, present when convex
  bool convex = false;
  bool one_sided = false;
  bool special = false;
  int side = 0;  // common orient3d sign of the bystanders against the plane, 0 if mixed

  Rat global_time() const { return segment + time; }
};

struct Trace3Options {
  /// Reads the quadrilateral clockwise instead of counterclockwise as seen
  /// from the bystanders. The emitted generator must not change.
  bool flip_orientation = false;
};

/// Every coplanarity crossing, special or not, in time order. Throws
/// Degenerate for simultaneous events sharing three indices or five coplanar
/// points, and CollinearTriple when a mover passes through the line of two others.
std::vector<Event3> trace3(const Choreo3& ch, const Trace3Options& options = {});

/// Letters of the special events in time order.
GammaWord g_word(const Choreo3& ch, const Trace3Options& options = {});
GammaWord g_word(const std::vector<Event3>& events);

Choreo3 concat(const Choreo3& a, const Choreo3& b);
Choreo3 reverse(const Choreo3& ch);

}  // namespace braidgamma::geom3d
