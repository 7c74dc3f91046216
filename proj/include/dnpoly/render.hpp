#ifndef DNPOLY_RENDER_HPP
#define DNPOLY_RENDER_HPP

// Deterministic SVG drawing of a diagram on the regular 2n-gon. Green
// diameters are zigzags, red ones straight; elements of D are drawn thick.

#include <optional>
#include <string>

#include "dnpoly/polygon.hpp"

namespace dnpoly {

struct RenderStyle {
  std::string pair_stroke = "#222222";
  std::string red_stroke = "#c0392b";
  std::string green_stroke = "#1e8449";
  std::string outline_stroke = "#555555";
  double thin = 1.5;
  double thick = 4.5;
  /// Zigzag amplitude as a fraction of the canvas size.
  double zigzag_amplitude = 0.012;
  int zigzag_teeth = 14;
};

struct RenderSpec {
  Diagram diagram;
  /// Drawn thick; also drawn when not part of `diagram`.
  std::optional<Diagram> highlight;
  /// Shade the cells of `highlight` (or of the empty diagram when unset).
  bool shade_cells = false;
  int size = 480;
  RenderStyle style;
};

/// Throws std::invalid_argument if the highlight has another rank, or if
/// cells are requested for a highlight that crosses itself.
std::string render_svg(const RenderSpec& spec);

}  // namespace dnpoly

#endif  // DNPOLY_RENDER_HPP
