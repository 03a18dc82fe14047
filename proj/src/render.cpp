#include "halfdom/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace halfdom {

namespace {

struct Shape {
  int vertex;
  int i;
  int j;
  int k;
  std::vector<Point> points;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  if (spec.graph == nullptr) throw std::invalid_argument("render needs a graph");
  const QuotientGraph& graph = *spec.graph;
  if (spec.selection != nullptr && spec.selection->size() != graph.size()) {
    throw std::invalid_argument("selection does not match graph");
  }
  const ClusterSpec& cluster = cluster_spec(graph.kind());
  const bool klein = graph.quotient() == Quotient::klein;

  auto place = [&](int i, int j, int k) {
    const auto& tile = cluster.tiles[static_cast<std::size_t>(k - 1)];
    std::vector<Point> pts;
    pts.reserve(tile.outline.size());
    const double ox = i * cluster.v1.x + j * cluster.v2.x;
    const double oy = i * cluster.v1.y + j * cluster.v2.y;
    for (const auto& p : tile.outline) pts.push_back({p.x + ox, p.y + oy});
    return pts;
  };

  std::vector<Shape> shapes;
  if (klein) {
    const int n = graph.n();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int rep_lower = i * n + j;
        shapes.push_back({rep_lower, i, j, 1, place(i, j, 1)});
        const int rep_upper = ((n - 1 - i) % n) * n + ((n - 1 - j) % n);
        shapes.push_back({rep_upper, i, j, 2, place(i, j, 2)});
      }
    }
  } else {
    for (const auto& rec : graph.vertices()) shapes.push_back({rec.id, rec.i, rec.j, rec.k, place(rec.i, rec.j, rec.k)});
  }

  double min_x = std::numeric_limits<double>::max();
  double min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = max_x;
  for (const auto& s : shapes) {
    for (const auto& p : s.points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  if (shapes.empty()) min_x = min_y = max_x = max_y = 0;
  const double margin = 0.5;
  const double span_x = std::max(max_x - min_x, 1e-9) + 2 * margin;
  const double span_y = std::max(max_y - min_y, 1e-9) + 2 * margin;
  const double width = std::max(spec.width, 1);
  const double scale = width / span_x;
  const double drawing_height = spec.height > 0 ? spec.height : span_y * scale;
  const double legend_height = klein ? 48 : 24;
  const double height = drawing_height + legend_height;

  auto sx = [&](double x) { return (x - min_x + margin) * scale; };
  auto sy = [&](double y) { return drawing_height - (y - min_y + margin) * scale; };  // y up

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<g stroke=\"" << escape(spec.palette.stroke) << "\" stroke-width=\"1\" stroke-linejoin=\"round\">\n";
  for (const auto& s : shapes) {
    const bool on = spec.selection != nullptr && spec.selection->contains(s.vertex);
    out << "<polygon data-vertex=\"" << s.vertex << "\" data-ijk=\"" << s.i << "," << s.j << "," << s.k
        << "\" fill=\"" << escape(on ? spec.palette.highlight : spec.palette.fill) << "\" points=\"";
    for (std::size_t p = 0; p < s.points.size(); ++p) {
      if (p > 0) out << ' ';
      out << fmt(sx(s.points[p].x)) << ',' << fmt(sy(s.points[p].y));
    }
    out << "\"/>\n";
  }
  out << "</g>\n";

  const int selected = spec.selection != nullptr ? spec.selection->count() : 0;
  std::ostringstream caption;
  caption << name(graph.kind()) << "  " << to_string(graph.quotient()) << " " << graph.m() << "x" << graph.n()
          << "  |V|=" << graph.size() << "  selected=" << selected;
  out << "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"#000000\">\n";
  out << "<text x=\"8\" y=\"" << fmt(drawing_height + 18) << "\">" << escape(caption.str()) << "</text>\n";
  if (klein) {
    out << "<text x=\"8\" y=\"" << fmt(drawing_height + 38)
        << "\">unrolled torus; tile (i,j,2) is identified with (n-1-i,n-1-j,1)</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace halfdom
