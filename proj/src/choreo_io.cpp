#include "braidgamma/choreo_io.hpp"

#include <fstream>

#include "braidgamma/errors.hpp"

namespace braidgamma::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationFailed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rat rat_of(const Json& j) {
  if (!j.is_string()) throw ValidationFailed("rationals must be strings such as \"3/4\", got " + j.dump());
  return parse_rat(j.get<std::string>());
}

std::vector<Rat> coords_of(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw ValidationFailed("expected a point with " + std::to_string(dim) + " coordinates, got " + j.dump());
  }
  std::vector<Rat> out;
  for (const auto& c : j) out.push_back(rat_of(c));
  return out;
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationFailed(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<int>();
}

template <class Point, class Make>
void read_common(const Json& j, std::size_t dim, int& n, std::vector<Point>& start, std::vector<std::pair<int, Point>>& moves,
                 bool& loop, Make make) {
  n = int_of(field(j, "n"), "n");
  const Json& points = field(j, "points");
  if (!points.is_array()) throw ValidationFailed("\"points\" must be an array");
  for (const auto& p : points) start.push_back(make(coords_of(p, dim)));
  if (j.contains("moves")) {
    const Json& ms = j.at("moves");
    if (!ms.is_array()) throw ValidationFailed("\"moves\" must be an array");
    for (const auto& m : ms) moves.emplace_back(int_of(field(m, "point"), "point"), make(coords_of(field(m, "to"), dim)));
  }
  loop = false;
  if (j.contains("loop")) {
    if (!j.at("loop").is_boolean()) throw ValidationFailed("\"loop\" must be a boolean");
    loop = j.at("loop").get<bool>();
  }
}

Json surd_json(const Surd& s) {
  return Json{{"a", to_string(s.a)}, {"b", to_string(s.b)}, {"d", to_string(s.d)}};
}

}  // namespace

AnyChoreography choreography_from_json(const Json& j) {
  const int dim = j.is_object() && j.contains("dim") ? int_of(j.at("dim"), "dim") : 2;
  if (dim == 2) {
    geom2d::Choreography ch;
    std::vector<std::pair<int, geom2d::Pt2>> moves;
    read_common(j, 2, ch.n, ch.start, moves, ch.loop, [](const std::vector<Rat>& c) { return geom2d::Pt2{c[0], c[1]}; });
    for (auto& [k, p] : moves) ch.moves.push_back({k, p});
    geom2d::validate(ch);
    return ch;
  }
  if (dim == 3) {
    geom3d::Choreo3 ch;
    std::vector<std::pair<int, geom3d::Pt3>> moves;
    read_common(j, 3, ch.n, ch.start, moves, ch.loop,
                [](const std::vector<Rat>& c) { return geom3d::Pt3{c[0], c[1], c[2]}; });
    for (auto& [k, p] : moves) ch.moves.push_back({k, p});
    geom3d::validate(ch);
    return ch;
  }
  throw ValidationFailed("\"dim\" must be 2 or 3, got " + std::to_string(dim));
}

AnyChoreography load_choreography(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationFailed("cannot open " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw SyntaxError(path.string() + ": " + e.what(), e.byte);
  }
  return choreography_from_json(j);
}

Json to_json(const geom2d::Choreography& ch) {
  Json points = Json::array();
  for (const auto& p : ch.start) points.push_back({to_string(p.x), to_string(p.y)});
  Json moves = Json::array();
  for (const auto& m : ch.moves) moves.push_back({{"point", m.point}, {"to", {to_string(m.to.x), to_string(m.to.y)}}});
  return Json{{"n", ch.n}, {"dim", 2}, {"points", points}, {"moves", moves}, {"loop", ch.loop}};
}

Json to_json(const geom3d::Choreo3& ch) {
  Json points = Json::array();
  for (const auto& p : ch.start) points.push_back({to_string(p.x), to_string(p.y), to_string(p.z)});
  Json moves = Json::array();
  for (const auto& m : ch.moves) {
    moves.push_back({{"point", m.point}, {"to", {to_string(m.to.x), to_string(m.to.y), to_string(m.to.z)}}});
  }
  return Json{{"n", ch.n}, {"dim", 3}, {"points", points}, {"moves", moves}, {"loop", ch.loop}};
}

Json to_json(const geom2d::Event& e) {
  const auto& t = e.time;
  return Json{{"segment", t.segment},
              {"poly", {to_string(t.poly.c0), to_string(t.poly.c1), to_string(t.poly.c2)}},
              {"root", surd_json(t.root)},
              {"interval", {to_string(t.isolating.lo), to_string(t.isolating.hi)}},
              {"mover", e.mover},
              {"quad", to_string(e.quad)},
              {"subset", to_string(e.subset)},
              {"inside", e.inside}};
}

Json to_json(const geom3d::Event3& e) {
  Json j{{"segment", e.segment},  {"time", to_string(e.time)}, {"mover", e.mover},
         {"subset", to_string(e.subset)}, {"convex", e.convex}, {"one_sided", e.one_sided},
         {"special", e.special},   {"side", e.side}};
  j["quad"] = e.quad ? Json(to_string(*e.quad)) : Json(nullptr);
  return j;
}

}  // namespace braidgamma::io
