#include "braidgamma/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "braidgamma/errors.hpp"

namespace braidgamma::svg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_frame(const std::vector<geom2d::Pt2>& points, const FrameOptions& options) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) xy.emplace_back(p.x.get_d(), p.y.get_d());

  std::optional<std::pair<std::pair<double, double>, double>> circle;
  if (options.circle) {
    const auto& t = *options.circle;
    for (int k : t) {
      if (k < 1 || k > static_cast<int>(points.size())) {
        throw IndexOutOfRange("circle index " + std::to_string(k) + " outside 1.." + std::to_string(points.size()));
      }
    }
    const auto c = geom2d::circumcircle(points[t[0] - 1], points[t[1] - 1], points[t[2] - 1]);
    if (!c) throw ValidationFailed("circle points are collinear");
    circle = {{c->center.x.get_d(), c->center.y.get_d()}, std::sqrt(c->radius2.get_d())};
  }

  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!xy.empty()) {
    lo_x = hi_x = xy[0].first;
    lo_y = hi_y = xy[0].second;
  }
  auto include = [&](double x, double y) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  };
  for (const auto& [x, y] : xy) include(x, y);
  if (circle) {
    const auto [cx, cy] = circle->first;
    const double r = circle->second;
    include(cx - r, cy - r);
    include(cx + r, cy + r);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double margin = 24;
  const double scale = (options.size - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - lo_x) * scale; };
  auto sy = [&](double y) { return options.size - margin - (y - lo_y) * scale; };

  std::string out;
  const std::string size = std::to_string(options.size);
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size + "\" viewBox=\"0 0 " +
         size + " " + size + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (circle) {
    out += "<circle id=\"circle\" cx=\"" + fmt(sx(circle->first.first)) + "\" cy=\"" + fmt(sy(circle->first.second)) +
           "\" r=\"" + fmt(circle->second * scale) + "\" fill=\"none\" stroke=\"#c33\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t k = 0; k < xy.size(); ++k) {
    const std::string id = std::to_string(k + 1);
    const std::string cx = fmt(sx(xy[k].first));
    const std::string cy = fmt(sy(xy[k].second));
    out += "<circle id=\"p" + id + "\" cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"4\" fill=\"black\"/>\n";
    out += "<text x=\"" + fmt(sx(xy[k].first) + 6) + "\" y=\"" + fmt(sy(xy[k].second) - 6) +
           "\" font-family=\"monospace\" font-size=\"12\">" + id + "</text>\n";
  }
  if (!options.caption.empty()) {
    out += "<text x=\"8\" y=\"16\" font-family=\"monospace\" font-size=\"12\">" + escape(options.caption) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace braidgamma::svg
