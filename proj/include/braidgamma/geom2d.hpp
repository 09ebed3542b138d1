#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidgamma/braids.hpp"
#include "braidgamma/exact.hpp"
#include "braidgamma/generators.hpp"
#include "braidgamma/words.hpp"

namespace braidgamma::geom2d {

struct Pt2 {
  Rat x;
  Rat y;
  bool operator==(const Pt2&) const = default;
};

/// Positive for a counterclockwise turn a→b→c.
int orient2d_sign(const Pt2& a, const Pt2& b, const Pt2& c);

/// Raw incircle determinant: positive iff p is inside the circle through a, b, c
/// when a, b, c are counterclockwise. Affine-quadratic in p.
Rat incircle_det(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& p);

/// Zero iff a, b, c, p are concyclic or collinear. For non-collinear a, b, c the
/// result is positive iff p lies strictly inside their circle. For collinear
/// a, b, c it is the sign of the raw determinant, which tells the two sides of
/// their line apart.
int incircle_sign(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& p);

/// Parameter ratio of base_config: t_k = B^k for the returned B.
Rat base_ratio(int n);

/// P_k = (t_k, t_k^2) with t_k = B^k, B the smallest power of two >= 4 for which
/// no four points are concyclic and every circle through P_j, P_p, P_q (j<p<q)
/// encloses exactly {P_1..P_{j-1}} ∪ {P_{p+1}..P_{q-1}}. Throws ValidationFailed
/// if no B <= 2^20 qualifies.
std::vector<Pt2> base_config(int n);

struct Move2 {
  StrandIndex point;  // 1-based
  Pt2 to;
  bool operator==(const Move2&) const = default;
};

/// Piecewise-linear motion: move k carries one point linearly to `to` during
/// global time [k, k+1].
struct Choreography {
  int n = 0;
  std::vector<Pt2> start;
  std::vector<Move2> moves;
  bool loop = false;
  bool operator==(const Choreography&) const = default;
};

/// Configuration after the first k moves.
std::vector<Pt2> positions_after(const Choreography& ch, std::size_t k);
/// Configuration at global time t in [0, moves.size()].
std::vector<Pt2> positions_at(const Choreography& ch, const Rat& t);

/// Checks sizes, indices and the loop flag (ValidationFailed), and that no two
/// points coincide and no four are concyclic or collinear at any segment
/// endpoint (Degenerate).
void validate(const Choreography& ch);

/// Wall-crossing time: a simple root of `poly` (the incircle determinant of the
/// tuple along the segment, in local time u ∈ (0,1)). `isolating` contains the
/// root and no other root of any tuple of the same segment.
struct EventTime {
  int segment = 0;
  Poly2 poly;
  Surd root;
  Bracket isolating;

  /// segment + root, for display only.
  double approx() const { return segment + root.approx(); }
};

struct Event {
  EventTime time;
  StrandIndex mover;
  GammaGen quad;  // cyclic order on the circle (or line closed through infinity)
  GGen subset;
  int inside = 0;  // other points strictly inside the circle
};

struct TraceResult {
  std::vector<Event> events;
  /// Tangencies (roots without sign change); they emit no letters.
  std::vector<std::string> warnings;
};

/// Exact event detection. Throws Degenerate when five points meet one wall,
/// two points collide, or inside counts disagree across an event.
TraceResult trace(const Choreography& ch);

GWord events_to_g_word(const std::vector<Event>& events);
GammaWord events_to_gamma_word(const std::vector<Event>& events);
/// Slot = inside mod r.
MultiWord events_to_multi_word(const std::vector<Event>& events, int r);

/// Loop realising b_{ij} over base_config(n): P_i passes above P_{i+1}..P_j,
/// P_j passes above P_i, P_i returns above P_{j-1}..P_{i+1}, P_j returns.
/// Waypoints sit a clearance ε above the parabola; ε starts at half the
/// smallest vertical gap of the base points and is halved until the loop
/// traces without degeneracies or tangencies.
Choreography choreo_b(int n, StrandIndex i, StrandIndex j);

/// Concatenation of choreo_b and its reverse following the letters of w.
Choreography braid_choreography(const BraidWord& w);

/// Throws EndpointMismatch unless b starts where a ends.
Choreography concat(const Choreography& a, const Choreography& b);
Choreography reverse(const Choreography& ch);

/// Centre and squared radius of the circle through three non-collinear points.
struct Circle {
  Pt2 center;
  Rat radius2;
};
std::optional<Circle> circumcircle(const Pt2& a, const Pt2& b, const Pt2& c);

}  // namespace braidgamma::geom2d
