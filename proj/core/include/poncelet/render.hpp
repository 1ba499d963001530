#pragma once

// Deterministic SVG figures.

#include <optional>
#include <string>
#include <string_view>

#include "poncelet/construct.hpp"

namespace poncelet {

enum class Figure { kConcurrentCircles, kCentroids, kNagel, kFuhrmann };

/// conc_circum, centroids, nagel or fuhrmann.
std::optional<Figure> parse_figure(std::string_view name);
std::string_view to_string(Figure f);

struct RenderOptions {
  int width = 800;
  int height = 800;
  Backend backend = Backend::kExact;
};

/// SVG 1.1 document. World coordinates map to the viewBox by
///   x' = ox + s * x,  y' = oy - s * y
/// with s, ox, oy chosen so the figure's points and circles fit inside an 8%
/// margin; the mapping is recorded in the document's <desc>. Numbers are
/// written with 6 significant digits. Hyperbola branches are sampled at 256
/// chords through the center and cut where they leave the viewport.
/// Throws GeometryError when the configuration does not support the figure.
std::string render_svg(const SceneInput& in, Figure figure, const RenderOptions& opts = {});

}  // namespace poncelet
