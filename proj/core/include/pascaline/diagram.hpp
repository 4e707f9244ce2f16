#pragma once

#include <string>
#include <vector>

#include "pascaline/conic.hpp"

namespace pascaline {

// Deterministic SVG rendering of a configuration. The conic is drawn as the
// unit circle through the rational chart
//   a -> ((1-a^2)/(1+a^2), 2a/(1+a^2)),
// which is the linear map (a0,a1,a2) -> (a0-a2, -a1, a0+a2) on pole
// coordinates; rational points land on exactly computable positions and
// rounding happens only at emission. The affine coordinate inf lands at
// (-1, 0). Elements with no real position in the chart (chart denominator
// zero) are skipped with a warning.

struct DiagramSpec {
  struct Mark {
    std::string name;
    PlanePoint point;
  };
  // style one of: "chord", "tangent", "aux", "pascal"
  struct Stroke {
    Line line;
    std::string style;
  };

  std::vector<Mark> marks;
  std::vector<Stroke> strokes;
  bool draw_conic = true;
};

struct SvgResult {
  std::string svg;
  std::vector<std::string> warnings;
};

SvgResult render_svg(const DiagramSpec& spec);

}  // namespace pascaline
