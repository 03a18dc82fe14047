#pragma once

#include <string>

#include "halfdom/halfdom.hpp"
#include "halfdom/quotient_graph.hpp"

namespace halfdom {

struct Palette {
  std::string stroke = "#333333";
  std::string fill = "#ffffff";
  std::string highlight = "#e4572e";
};

struct RenderSpec {
  const QuotientGraph* graph = nullptr;
  const Selection* selection = nullptr;  // optional
  Palette palette;
  int width = 800;   // pixels; height follows the aspect ratio when 0
  int height = 0;
};

/// Standalone SVG with one <polygon> per tile of the m x n patch. Klein
/// graphs are drawn as the unrolled n x n torus: each representative appears
/// twice (as its lower and its rotated upper triangle) and a legend states
/// the identification. Throws std::invalid_argument when the selection size
/// does not match the graph.
std::string render_svg(const RenderSpec& spec);

}  // namespace halfdom
