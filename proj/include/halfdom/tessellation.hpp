#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace halfdom {

/// The eleven edge-to-edge tessellations of the plane by regular polygons
/// with a single vertex type (three regular, eight semi-regular).
enum class TessKind : std::uint8_t {
  square,                  // 4.4.4.4
  hexagonal,               // 6.6.6
  triangular,              // 3.3.3.3.3.3
  elongated_triangular,    // 3.3.3.4.4
  trihexagonal,            // 3.6.3.6
  rhombitrihexagonal,      // 3.4.6.4
  truncated_square,        // 4.8.8
  truncated_trihexagonal,  // 4.6.12
  truncated_hexagonal,     // 3.12.12
  snub_square,             // 3.3.4.3.4
  snub_trihexagonal,       // 3.3.3.3.6
};

/// All kinds, in the order listed above.
std::span<const TessKind> catalog();

/// Canonical vertex-arrangement name, e.g. "3.4.6.4".
std::string_view name(TessKind kind);

/// Side counts around a vertex, in canonical order.
std::vector<int> vertex_arrangement(TessKind kind);

/// Accepts canonical names plus the usual exponent notations such as
/// "(3^3,4^2)", "(4,3,3,4,3)", "(12,6,4)" or "3^6". Any rotation or
/// reflection of the arrangement is accepted.
std::optional<TessKind> try_parse_kind(std::string_view text);

/// As try_parse_kind; throws std::invalid_argument for unknown names.
TessKind parse_kind(std::string_view text);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct TileSpec {
  int index = 0;  // 1-based position in the cluster
  int sides = 0;
  std::vector<Point> outline;  // counter-clockwise, unit edge length
};

/// Tile a of cluster (i, j) shares an edge with tile b of cluster
/// (i + di, j + dj).
struct InterEdge {
  int a = 0;
  int b = 0;
  int di = 0;
  int dj = 0;
};

/// Minimal translational cluster of a tessellation.
struct ClusterSpec {
  TessKind kind = TessKind::square;
  std::vector<TileSpec> tiles;
  std::vector<std::pair<int, int>> intra_edges;  // tile indices, 1-based
  std::vector<InterEdge> inter_edges;
  Point v1;
  Point v2;

  [[nodiscard]] int size() const { return static_cast<int>(tiles.size()); }
};

/// Built-in cluster for a kind. Tile orders: triangular (lower, upper);
/// elongated_triangular (square, triangle, triangle); rhombitrihexagonal
/// (hexagon, square, triangle, square, triangle, square).
const ClusterSpec& cluster_spec(TessKind kind);

/// Lists every violated cluster invariant; empty when the spec is valid.
std::vector<std::string> validate_cluster(const ClusterSpec& spec);

}  // namespace halfdom
