#include "braidgamma/geom2d.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "braidgamma/errors.hpp"

namespace braidgamma::geom2d {

namespace {

Rat orient2d_det(const Pt2& a, const Pt2& b, const Pt2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::string point_list(std::initializer_list<int> zero_based) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k : zero_based) {
    os << (first ? "" : ",") << k + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string describe_interval(int segment, const Bracket& b) {
  return "segment " + std::to_string(segment) + ", local time in [" + to_string(b.lo) + ", " + to_string(b.hi) + "]";
}

// Linear function u ↦ c0 + c1 u evaluated at an exact point.
int linear_sign_at(const Rat& c0, const Rat& c1, const Surd& u) {
  return sign_of_sum(c0 + c1 * u.a, c1 * u.b, u.d, 0, 0);
}

Surd linear_at(const Rat& c0, const Rat& c1, const Surd& u) { return Surd{c0 + c1 * u.a, c1 * u.b, u.d}; }

// Interval [lo, hi] ⊂ (0,1) around x containing none of `others`.
Bracket separate(const Surd& x, const std::vector<Surd>& others) {
  Rat lo = 0, hi = 1;
  for (;;) {
    bool clear = true;
    for (const auto& o : others) {
      if (compare(o, Surd{lo}) >= 0 && compare(o, Surd{hi}) <= 0) {
        clear = false;
        break;
      }
    }
    if (clear) return {lo, hi};
    const Rat mid = (lo + hi) / 2;
    const int c = compare(x, Surd{mid});
    if (c < 0) {
      hi = mid;
    } else if (c > 0) {
      lo = mid;
    } else {
      lo = (lo + mid) / 2;
      hi = (mid + hi) / 2;
    }
  }
}

struct Candidate {
  RealRoot root;
  std::array<int, 3> statics;  // zero-based, ascending
  Poly2 poly;
};

int common_statics(const Candidate& a, const Candidate& b) {
  int count = 0;
  for (int x : a.statics) count += std::count(b.statics.begin(), b.statics.end(), x) > 0 ? 1 : 0;
  return count;
}

void check_endpoint(const std::vector<Pt2>& pos, int only_with, int segment) {
  const int n = static_cast<int>(pos.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if ((only_with < 0 || a == only_with || b == only_with) && pos[a] == pos[b]) {
        throw Degenerate("points " + point_list({a, b}) + " coincide after move " + std::to_string(segment));
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (only_with >= 0 && a != only_with && b != only_with && c != only_with && d != only_with) continue;
          if (incircle_det(pos[a], pos[b], pos[c], pos[d]) == 0) {
            throw Degenerate("points " + point_list({a, b, c, d}) + " are concyclic or collinear after move " +
                             std::to_string(segment) + "; perturb the waypoint");
          }
        }
}

// Cyclic order of the three statics and the mover on their common circle (or
// line) at local time u.
GammaGen cyclic_order(const std::vector<Pt2>& pos, const std::array<int, 3>& st, int mover, const Pt2& from,
                      const Pt2& to, const Surd& u) {
  const Pt2& a = pos[st[0]];
  const Pt2& b = pos[st[1]];
  const Pt2& c = pos[st[2]];
  const Rat o = orient2d_det(a, b, c);
  if (o != 0) {
    std::array<int, 3> ccw = o > 0 ? std::array<int, 3>{st[0], st[1], st[2]} : std::array<int, 3>{st[0], st[2], st[1]};
    for (int k = 0; k < 3; ++k) {
      const Pt2& x = pos[ccw[k]];
      const Pt2& y = pos[ccw[(k + 1) % 3]];
      const Pt2& w = pos[ccw[(k + 2) % 3]];
      const Rat o0 = orient2d_det(x, y, from);
      const Rat o1 = orient2d_det(x, y, to);
      const int side = linear_sign_at(o0, o1 - o0, u);
      if (side != 0 && side == -sign(orient2d_det(x, y, w))) {
        return GammaGen(ccw[k] + 1, mover + 1, ccw[(k + 1) % 3] + 1, ccw[(k + 2) % 3] + 1);
      }
    }
    throw Degenerate("mover coincides with a point of its circle");
  }
  // Line wall: sort along the line, then close the order through infinity.
  const Pt2 dir{c.x - a.x, c.y - a.y};
  auto param = [&](const Pt2& p) { return (p.x - a.x) * dir.x + (p.y - a.y) * dir.y; };
  const Rat s0 = param(from);
  std::vector<std::pair<Surd, int>> along{{Surd{param(a)}, st[0]}, {Surd{param(b)}, st[1]}, {Surd{param(c)}, st[2]},
                                          {linear_at(s0, param(to) - s0, u), mover}};
  std::sort(along.begin(), along.end(), [](const auto& l, const auto& r) { return compare(l.first, r.first) < 0; });
  return GammaGen(along[0].second + 1, along[1].second + 1, along[2].second + 1, along[3].second + 1);
}

}  // namespace

int orient2d_sign(const Pt2& a, const Pt2& b, const Pt2& c) { return sign(orient2d_det(a, b, c)); }

Rat incircle_det(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& p) {
  const Rat adx = a.x - p.x, ady = a.y - p.y;
  const Rat bdx = b.x - p.x, bdy = b.y - p.y;
  const Rat cdx = c.x - p.x, cdy = c.y - p.y;
  const Rat alift = adx * adx + ady * ady;
  const Rat blift = bdx * bdx + bdy * bdy;
  const Rat clift = cdx * cdx + cdy * cdy;
  return adx * (bdy * clift - cdy * blift) - ady * (bdx * clift - cdx * blift) + alift * (bdx * cdy - cdx * bdy);
}

int incircle_sign(const Pt2& a, const Pt2& b, const Pt2& c, const Pt2& p) {
  const int det = sign(incircle_det(a, b, c, p));
  const int o = orient2d_sign(a, b, c);
  return o == 0 ? det : det * o;
}

namespace {

std::vector<Pt2> parabola_points(int n, const Rat& ratio) {
  std::vector<Pt2> pts;
  Rat t = 1;
  for (int k = 1; k <= n; ++k) {
    t *= ratio;
    pts.push_back({t, t * t});
  }
  return pts;
}

bool base_properties_hold(const std::vector<Pt2>& pts) {
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (incircle_sign(pts[a], pts[b], pts[c], pts[d]) == 0) return false;
        }
  for (int j = 0; j < n; ++j)
    for (int p = j + 1; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int k = 0; k < n; ++k) {
          if (k == j || k == p || k == q) continue;
          const bool expected = k < j || (p < k && k < q);
          if ((incircle_sign(pts[j], pts[p], pts[q], pts[k]) > 0) != expected) return false;
        }
  return true;
}

}  // namespace

Rat base_ratio(int n) {
  if (n < 1) throw ValidationFailed("base configuration needs n >= 1");
  static std::mutex mutex;
  static std::map<int, Rat> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (long ratio = 4; ratio <= (1L << 20); ratio *= 2) {
    if (base_properties_hold(parabola_points(n, Rat(ratio)))) {
      cache.emplace(n, Rat(ratio));
      return Rat(ratio);
    }
  }
  throw ValidationFailed("no base ratio up to 2^20 satisfies the base configuration properties for n = " +
                         std::to_string(n));
}

std::vector<Pt2> base_config(int n) { return parabola_points(n, base_ratio(n)); }

std::vector<Pt2> positions_after(const Choreography& ch, std::size_t k) {
  auto pos = ch.start;
  for (std::size_t s = 0; s < k && s < ch.moves.size(); ++s) pos[ch.moves[s].point - 1] = ch.moves[s].to;
  return pos;
}

std::vector<Pt2> positions_at(const Choreography& ch, const Rat& t) {
  if (t < 0 || t > static_cast<long>(ch.moves.size())) {
    throw ValidationFailed("time " + to_string(t) + " outside [0, " + std::to_string(ch.moves.size()) + "]");
  }
  mpz_class whole = t.get_num() / t.get_den();
  const std::size_t segment = whole.get_ui();
  auto pos = positions_after(ch, segment);
  if (segment < ch.moves.size()) {
    const Rat u = t - Rat(whole);
    const auto& mv = ch.moves[segment];
    Pt2& p = pos[mv.point - 1];
    p = Pt2{p.x + u * (mv.to.x - p.x), p.y + u * (mv.to.y - p.y)};
  }
  return pos;
}

void validate(const Choreography& ch) {
  if (ch.n < 1) throw ValidationFailed("choreography needs n >= 1");
  if (static_cast<int>(ch.start.size()) != ch.n) {
    throw ValidationFailed("expected " + std::to_string(ch.n) + " start points, got " + std::to_string(ch.start.size()));
  }
  for (std::size_t s = 0; s < ch.moves.size(); ++s) {
    const int k = ch.moves[s].point;
    if (k < 1 || k > ch.n) throw ValidationFailed("move " + std::to_string(s) + " names point " + std::to_string(k));
  }
  auto pos = ch.start;
  check_endpoint(pos, -1, 0);
  for (std::size_t s = 0; s < ch.moves.size(); ++s) {
    pos[ch.moves[s].point - 1] = ch.moves[s].to;
    check_endpoint(pos, ch.moves[s].point - 1, static_cast<int>(s) + 1);
  }
  if (ch.loop && pos != ch.start) throw ValidationFailed("loop flag set but the final configuration differs");
}

TraceResult trace(const Choreography& ch) {
  validate(ch);
  TraceResult out;
  auto pos = ch.start;
  const int n = ch.n;
  for (std::size_t s = 0; s < ch.moves.size(); ++s) {
    const int segment = static_cast<int>(s);
    const int m = ch.moves[s].point - 1;
    const Pt2 from = pos[m];
    const Pt2 to = ch.moves[s].to;
    if (from == to) continue;
    const Pt2 dir{to.x - from.x, to.y - from.y};
    const Pt2 back{from.x - dir.x, from.y - dir.y};
    auto at = [&](const Rat& u) { return Pt2{from.x + u * dir.x, from.y + u * dir.y}; };

    for (int k = 0; k < n; ++k) {
      if (k == m) continue;
      const Rat u = dir.x != 0 ? (pos[k].x - from.x) / dir.x : (pos[k].y - from.y) / dir.y;
      if (u > 0 && u < 1 && at(u) == pos[k]) {
        throw Degenerate("point " + std::to_string(m + 1) + " runs into point " + std::to_string(k + 1) +
                         " in segment " + std::to_string(segment) + " at local time " + to_string(u));
      }
    }

    std::vector<int> others;
    for (int k = 0; k < n; ++k) {
      if (k != m) others.push_back(k);
    }
    std::vector<Candidate> found;
    for (std::size_t x = 0; x < others.size(); ++x)
      for (std::size_t y = x + 1; y < others.size(); ++y)
        for (std::size_t z = y + 1; z < others.size(); ++z) {
          const int a = others[x], b = others[y], c = others[z];
          const Poly2 poly = interpolate(incircle_det(pos[a], pos[b], pos[c], back),
                                         incircle_det(pos[a], pos[b], pos[c], from),
                                         incircle_det(pos[a], pos[b], pos[c], to));
          if (poly.is_zero()) {
            throw Degenerate("tuple " + point_list({m, a, b, c}) + " stays on one circle for all of segment " +
                             std::to_string(segment));
          }
          for (const auto& root : roots_in(poly, 0, 1)) found.push_back({root, {a, b, c}, poly});
        }
    std::stable_sort(found.begin(), found.end(), [](const Candidate& l, const Candidate& r) {
      const int c = compare(l.root.value, r.root.value);
      return c != 0 ? c < 0 : l.statics < r.statics;
    });

    for (std::size_t x = 0; x < found.size(); ++x) {
      for (std::size_t y = x + 1; y < found.size() && compare(found[y].root.value, found[x].root.value) == 0; ++y) {
        if (common_statics(found[x], found[y]) >= 2) {
          const auto& u = found[x].statics;
          const auto& v = found[y].statics;
          const Bracket near = bracket(found[x].root.value, 0, 1, Rat(1, 1 << 20));
          throw Degenerate("tuples " + point_list({m, u[0], u[1], u[2]}) + " and " + point_list({m, v[0], v[1], v[2]}) +
                           " meet one wall at the same moment (" + describe_interval(segment, near) +
                           "); perturb the path");
        }
      }
    }

    for (const auto& cand : found) {
      const auto& st = cand.statics;
      if (!cand.root.simple) {
        const Bracket near = bracket(cand.root.value, 0, 1, Rat(1, 1 << 20));
        out.warnings.push_back("Unstable: tuple " + point_list({m, st[0], st[1], st[2]}) +
                               " touches its wall without crossing (" + describe_interval(segment, near) +
                               "); no letter emitted");
        continue;
      }
      const Surd& u = cand.root.value;

      std::vector<Surd> barriers{Surd{0}, Surd{1}};
      for (const auto& other : found) {
        if (compare(other.root.value, u) != 0) barriers.push_back(other.root.value);
      }
      const Pt2& pa = pos[st[0]];
      const Pt2& pb = pos[st[1]];
      const Rat line0 = orient2d_det(pa, pb, from);
      const Rat line1 = orient2d_det(pa, pb, to);
      if (line1 != line0) barriers.push_back(Surd{-line0 / (line1 - line0)});
      const Bracket sep = separate(u, barriers);

      int inside[2] = {0, 0};
      const Rat samples[2] = {sep.lo, sep.hi};
      for (int side = 0; side < 2; ++side) {
        const Pt2 p = at(samples[side]);
        for (int k = 0; k < n; ++k) {
          if (k == m || k == st[0] || k == st[1] || k == st[2]) continue;
          if (incircle_sign(pa, pb, p, pos[k]) > 0) ++inside[side];
        }
      }
      if (inside[0] != inside[1]) {
        throw Degenerate("inside count of tuple " + point_list({m, st[0], st[1], st[2]}) + " changes across the event (" +
                         describe_interval(segment, sep) + "): " + std::to_string(inside[0]) + " before, " +
                         std::to_string(inside[1]) + " after");
      }

      Event ev{EventTime{segment, cand.poly, u, bracket(u, sep.lo, sep.hi, Rat(1, 1 << 20))}, m + 1,
               cyclic_order(pos, st, m, from, to, u), GGen(m + 1, st[0] + 1, st[1] + 1, st[2] + 1), inside[0]};
      out.events.push_back(std::move(ev));
    }
    pos[m] = to;
  }
  return out;
}

GWord events_to_g_word(const std::vector<Event>& events) {
  GWord w;
  for (const auto& e : events) w.letters.push_back(e.subset);
  return w;
}

GammaWord events_to_gamma_word(const std::vector<Event>& events) {
  GammaWord w;
  for (const auto& e : events) w.letters.push_back(e.quad);
  return w;
}

MultiWord events_to_multi_word(const std::vector<Event>& events, int r) {
  if (r < 1) throw IndexOutOfRange("product width r must be >= 1");
  MultiWord w{r, {}};
  for (const auto& e : events) w.letters.push_back(SlotLetter{e.inside % r, e.quad});
  return w;
}

namespace {

Choreography build_choreo_b(const std::vector<Pt2>& base, int i, int j, const Rat& eps) {
  const int n = static_cast<int>(base.size());
  auto above = [&](const Rat& x) { return Pt2{x, x * x + eps}; };
  auto on_parabola = [](const Rat& x) { return Pt2{x, x * x}; };
  const Rat ti = base[i - 1].x;
  const Rat tj = base[j - 1].x;
  const Rat park_i = j < n ? Rat((tj + base[j].x) / 2) : Rat(2 * tj);
  const Rat park_j = j < n ? Rat((park_i + base[j].x) / 2) : Rat(3 * tj);

  Choreography ch{n, base, {}, true};
  for (int k = i + 1; k <= j; ++k) ch.moves.push_back({i, above(base[k - 1].x)});
  ch.moves.push_back({i, on_parabola(park_i)});
  ch.moves.push_back({j, above(park_i)});
  ch.moves.push_back({j, on_parabola(park_j)});
  for (int k = j - 1; k > i; --k) ch.moves.push_back({i, above(base[k - 1].x)});
  ch.moves.push_back({i, on_parabola(ti)});
  ch.moves.push_back({j, on_parabola(tj)});
  return ch;
}

}  // namespace

Choreography choreo_b(int n, StrandIndex i, StrandIndex j) {
  if (i < 1 || i >= j || j > n) {
    throw ValidationFailed("choreo_b needs 1 <= i < j <= n, got (" + std::to_string(i) + "," + std::to_string(j) +
                           ") with n = " + std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<std::array<int, 3>, Choreography> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, i, j}); it != cache.end()) return it->second;
  }
  const auto base = base_config(n);
  Rat gap = base[1].y - base[0].y;
  for (int k = 1; k + 1 < n; ++k) gap = std::min(gap, Rat(base[k + 1].y - base[k].y));
  Rat eps = gap / 2;
  for (int attempt = 0; attempt < 16; ++attempt, eps /= 2) {
    Choreography ch = build_choreo_b(base, i, j, eps);
    try {
      if (trace(ch).warnings.empty()) {
        std::lock_guard lock(mutex);
        cache.emplace(std::array<int, 3>{n, i, j}, ch);
        return ch;
      }
    } catch (const Degenerate&) {
      // Shrink the clearance and retry.
    }
  }
  throw ValidationFailed("no clearance produced a generic loop for b(" + std::to_string(i) + "," + std::to_string(j) +
                         ")");
}

Choreography concat(const Choreography& a, const Choreography& b) {
  if (a.n != b.n) throw EndpointMismatch("choreographies over different point counts");
  if (positions_after(a, a.moves.size()) != b.start) {
    throw EndpointMismatch("second choreography does not start where the first ends");
  }
  Choreography out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  out.loop = positions_after(out, out.moves.size()) == out.start;
  return out;
}

Choreography reverse(const Choreography& ch) {
  Choreography out{ch.n, positions_after(ch, ch.moves.size()), {}, ch.loop};
  auto pos = ch.start;
  std::vector<Move2> forward_back;
  for (const auto& mv : ch.moves) {
    forward_back.push_back({mv.point, pos[mv.point - 1]});
    pos[mv.point - 1] = mv.to;
  }
  out.moves.assign(forward_back.rbegin(), forward_back.rend());
  return out;
}

Choreography braid_choreography(const BraidWord& w) {
  Choreography out{w.n, base_config(w.n), {}, true};
  for (const auto& g : w.letters) {
    const Choreography one = choreo_b(w.n, g.i, g.j);
    const Choreography step = g.exponent > 0 ? one : reverse(one);
    for (int k = 0; k < std::abs(g.exponent); ++k) out = concat(out, step);
  }
  return out;
}

std::optional<Circle> circumcircle(const Pt2& a, const Pt2& b, const Pt2& c) {
  const Rat d = 2 * orient2d_det(a, b, c);
  if (d == 0) return std::nullopt;
  const Rat bx = b.x - a.x, by = b.y - a.y;
  const Rat cx = c.x - a.x, cy = c.y - a.y;
  const Rat b2 = bx * bx + by * by;
  const Rat c2 = cx * cx + cy * cy;
  const Rat ux = (cy * b2 - by * c2) / d;
  const Rat uy = (bx * c2 - cx * b2) / d;
  return Circle{Pt2{a.x + ux, a.y + uy}, ux * ux + uy * uy};
}

}  // namespace braidgamma::geom2d
