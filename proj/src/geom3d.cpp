#include "braidgamma/geom3d.hpp"

#include <algorithm>
#include <array>

#include "braidgamma/errors.hpp"

namespace braidgamma::geom3d {

namespace {

struct Vec3 {
  Rat x, y, z;
};

Vec3 operator-(const Pt3& a, const Pt3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

std::string label(std::initializer_list<int> zero_based) {
  std::string s = "{";
  for (int k : zero_based) s += (s.size() > 1 ? "," : "") + std::to_string(k + 1);
  return s + "}";
}

bool collinear(const Pt3& a, const Pt3& b, const Pt3& c) { return is_zero(cross(b - a, c - a)); }

void check_endpoint(const std::vector<Pt3>& pos, int only_with, int step) {
  const int n = static_cast<int>(pos.size());
  auto involved = [only_with](std::initializer_list<int> ks) {
    return only_with < 0 || std::find(ks.begin(), ks.end(), only_with) != ks.end();
  };
  const std::string where = " after move " + std::to_string(step);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (involved({a, b}) && pos[a] == pos[b]) throw Degenerate("points " + label({a, b}) + " coincide" + where);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (involved({a, b, c}) && collinear(pos[a], pos[b], pos[c])) {
          throw CollinearTriple("points " + label({a, b, c}) + " are collinear" + where);
        }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (involved({a, b, c, d}) && orient3d_det(pos[a], pos[b], pos[c], pos[d]) == 0) {
            throw Degenerate("points " + label({a, b, c, d}) + " are coplanar" + where);
          }
}

// Planar coordinates after dropping the dominant axis of the normal.
struct Pt2 {
  Rat u, v;
};

Rat orient2(const Pt2& a, const Pt2& b, const Pt2& c) { return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u); }

std::array<Pt2, 4> project(const std::array<Pt3, 4>& q, const Vec3& normal) {
  const Rat ax = abs(normal.x), ay = abs(normal.y), az = abs(normal.z);
  std::array<Pt2, 4> out;
  for (int k = 0; k < 4; ++k) {
    if (ax >= ay && ax >= az) {
      out[k] = {q[k].y, q[k].z};
    } else if (ay >= az) {
      out[k] = {q[k].z, q[k].x};
    } else {
      out[k] = {q[k].x, q[k].y};
    }
  }
  return out;
}

bool strictly_inside(const Pt2& p, const Pt2& a, const Pt2& b, const Pt2& c) {
  const int s1 = sign(orient2(a, b, p));
  const int s2 = sign(orient2(b, c, p));
  const int s3 = sign(orient2(c, a, p));
  return s1 != 0 && s1 == s2 && s2 == s3;
}

}  // namespace

Rat orient3d_det(const Pt3& a, const Pt3& b, const Pt3& c, const Pt3& d) {
  return -dot(b - a, cross(c - a, d - a));
}

int orient3d_sign(const Pt3& a, const Pt3& b, const Pt3& c, const Pt3& d) { return sign(orient3d_det(a, b, c, d)); }

std::vector<Pt3> positions_after(const Choreo3& ch, std::size_t k) {
  auto pos = ch.start;
  for (std::size_t s = 0; s < k && s < ch.moves.size(); ++s) pos[ch.moves[s].point - 1] = ch.moves[s].to;
  return pos;
}

std::vector<Pt3> positions_at(const Choreo3& ch, const Rat& t) {
  if (t < 0 || t > static_cast<long>(ch.moves.size())) {
    throw ValidationFailed("time " + to_string(t) + " outside [0, " + std::to_string(ch.moves.size()) + "]");
  }
  mpz_class whole = t.get_num() / t.get_den();
  const std::size_t segment = whole.get_ui();
  auto pos = positions_after(ch, segment);
  if (segment < ch.moves.size()) {
    const Rat u = t - Rat(whole);
    const auto& mv = ch.moves[segment];
    Pt3& p = pos[mv.point - 1];
    p = Pt3{p.x + u * (mv.to.x - p.x), p.y + u * (mv.to.y - p.y), p.z + u * (mv.to.z - p.z)};
  }
  return pos;
}

void validate(const Choreo3& ch) {
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

std::vector<Event3> trace3(const Choreo3& ch, const Trace3Options& options) {
  validate(ch);
  std::vector<Event3> out;
  auto pos = ch.start;
  const int n = ch.n;
  for (std::size_t s = 0; s < ch.moves.size(); ++s) {
    const int segment = static_cast<int>(s);
    const int m = ch.moves[s].point - 1;
    const Pt3 from = pos[m];
    const Pt3 to = ch.moves[s].to;
    if (from == to) continue;
    const Vec3 dir = to - from;
    auto at = [&](const Rat& u) { return Pt3{from.x + u * dir.x, from.y + u * dir.y, from.z + u * dir.z}; };

    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (a == m || b == m) continue;
        const Vec3 axis = pos[b] - pos[a];
        const Vec3 c0 = cross(axis, from - pos[a]);
        const Vec3 c1 = cross(axis, dir);
        Rat u;
        if (c1.x != 0) u = -c0.x / c1.x;
        else if (c1.y != 0) u = -c0.y / c1.y;
        else if (c1.z != 0) u = -c0.z / c1.z;
        else continue;
        if (u > 0 && u < 1 && collinear(pos[a], pos[b], at(u))) {
          throw CollinearTriple("point " + std::to_string(m + 1) + " crosses the line through " + label({a, b}) +
                                " in segment " + std::to_string(segment) + " at local time " + to_string(u));
        }
      }

    struct Hit {
      Rat u;
      std::array<int, 3> st;
    };
    std::vector<Hit> hits;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          if (a == m || b == m || c == m) continue;
          const Rat d0 = orient3d_det(pos[a], pos[b], pos[c], from);
          const Rat d1 = orient3d_det(pos[a], pos[b], pos[c], to);
          if (d0 == d1) continue;
          const Rat u = d0 / (d0 - d1);
          if (u > 0 && u < 1) hits.push_back({u, {a, b, c}});
        }
    std::sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.u != r.u ? l.u < r.u : l.st < r.st; });
    for (std::size_t x = 0; x < hits.size(); ++x)
      for (std::size_t y = x + 1; y < hits.size() && hits[y].u == hits[x].u; ++y) {
        int shared = 0;
        for (int k : hits[x].st) shared += std::count(hits[y].st.begin(), hits[y].st.end(), k) > 0 ? 1 : 0;
        if (shared >= 2) {
          throw Degenerate("five points coplanar: " + label({m, hits[x].st[0], hits[x].st[1], hits[x].st[2]}) + " and " +
                           label({m, hits[y].st[0], hits[y].st[1], hits[y].st[2]}) + " in segment " +
                           std::to_string(segment) + " at local time " + to_string(hits[x].u) + "; perturb the path");
        }
      }

    for (const auto& hit : hits) {
      const auto& st = hit.st;
      const Pt3 p = at(hit.u);
      Event3 ev;
      ev.segment = segment;
      ev.time = hit.u;
      ev.mover = m + 1;
      ev.subset = GGen(m + 1, st[0] + 1, st[1] + 1, st[2] + 1);

      int signs[2] = {0, 0};
      std::vector<int> bystanders;
      for (int k = 0; k < n; ++k) {
        if (k == m || k == st[0] || k == st[1] || k == st[2]) continue;
        const int sk = orient3d_sign(pos[st[0]], pos[st[1]], pos[st[2]], pos[k]);
        if (sk == 0) {
          throw Degenerate("five points coplanar: " + label({m, st[0], st[1], st[2], k}) + " in segment " +
                           std::to_string(segment) + " at local time " + to_string(hit.u));
        }
        ++signs[sk > 0 ? 1 : 0];
        bystanders.push_back(k);
      }
      ev.one_sided = signs[0] == 0 || signs[1] == 0;
      ev.side = !ev.one_sided || bystanders.empty() ? 0 : (signs[1] > 0 ? 1 : -1);

      const std::array<int, 4> ids{m, st[0], st[1], st[2]};
      const std::array<Pt3, 4> q{p, pos[st[0]], pos[st[1]], pos[st[2]]};
      const auto flat = project(q, cross(q[2] - q[1], q[3] - q[1]));
      ev.convex = true;
      for (int k = 0; k < 4; ++k) {
        const auto& a = flat[(k + 1) % 4];
        const auto& b = flat[(k + 2) % 4];
        const auto& c = flat[(k + 3) % 4];
        if (strictly_inside(flat[k], a, b, c)) ev.convex = false;
      }
      if (ev.convex) {
        // Vertex opposite q[0]: the other two lie on different sides of the diagonal.
        int opp = 1;
        for (int k = 1; k < 4; ++k) {
          const int y = k == 1 ? 2 : 1;
          const int z = 6 - k - y;
          if (sign(orient2(flat[0], flat[k], flat[y])) * sign(orient2(flat[0], flat[k], flat[z])) < 0) opp = k;
        }
        const int y = opp == 1 ? 2 : 1;
        const int z = 6 - opp - y;
        std::array<int, 4> cyc{0, y, opp, z};
        bool reverse_it = options.flip_orientation;
        if (!bystanders.empty() && ev.one_sided) {
          if (orient3d_sign(q[0], q[y], q[opp], pos[bystanders.front()]) > 0) reverse_it = !reverse_it;
        }
        if (reverse_it) std::swap(cyc[1], cyc[3]);
        ev.quad = GammaGen(ids[cyc[0]] + 1, ids[cyc[1]] + 1, ids[cyc[2]] + 1, ids[cyc[3]] + 1);
      }
      ev.special = ev.convex && ev.one_sided;
      out.push_back(std::move(ev));
    }
    pos[m] = to;
  }
  return out;
}

GammaWord g_word(const std::vector<Event3>& events) {
  GammaWord w;
  for (const auto& e : events) {
    if (e.special) w.letters.push_back(*e.quad);
  }
  return w;
}

GammaWord g_word(const Choreo3& ch, const Trace3Options& options) { return g_word(trace3(ch, options)); }

Choreo3 concat(const Choreo3& a, const Choreo3& b) {
  if (a.n != b.n) throw EndpointMismatch("choreographies over different point counts");
  if (positions_after(a, a.moves.size()) != b.start) {
    throw EndpointMismatch("second choreography does not start where the first ends");
  }
  Choreo3 out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  out.loop = positions_after(out, out.moves.size()) == out.start;
  return out;
}

Choreo3 reverse(const Choreo3& ch) {
  Choreo3 out{ch.n, positions_after(ch, ch.moves.size()), {}, ch.loop};
  auto pos = ch.start;
  std::vector<Move3> back;
  for (const auto& mv : ch.moves) {
    back.push_back({mv.point, pos[mv.point - 1]});
    pos[mv.point - 1] = mv.to;
  }
  out.moves.assign(back.rbegin(), back.rend());
  return out;
}

}  // namespace braidgamma::geom3d
