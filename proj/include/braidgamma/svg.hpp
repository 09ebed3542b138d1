#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braidgamma/geom2d.hpp"

namespace braidgamma::svg {

struct FrameOptions {
  int size = 640;
  /// 1-based triple whose circumcircle is overlaid.
  std::optional<std::array<int, 3>> circle;
  std::string caption;
};

/// Byte-stable SVG of one configuration. Coordinates are converted to double
/// for display only.
std::string render_frame(const std::vector<geom2d::Pt2>& points, const FrameOptions& options = {});

}  // namespace braidgamma::svg
