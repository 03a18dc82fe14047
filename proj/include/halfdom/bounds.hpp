#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "halfdom/rational.hpp"
#include "halfdom/solver.hpp"
#include "halfdom/tessellation.hpp"

namespace halfdom {

enum class Granularity { polygon, position };

std::string_view to_string(Granularity g);
Granularity parse_granularity(std::string_view text);

struct TileClass {
  std::string label;
  int count = 0;   // tiles of this class per cluster
  int degree = 0;  // shared by every member
  bool uniform = true;
};

/// Tile classes of a tessellation and their neighbour profile, read off a
/// 3 x 3 torus. incidence[a][b] is the mean number of class-b neighbours of a
/// class-a tile; it is exact when class a is uniform.
struct ClassIncidence {
  TessKind kind = TessKind::square;
  Granularity granularity = Granularity::polygon;
  int cluster_size = 0;
  std::vector<TileClass> classes;
  std::vector<std::vector<Rational>> incidence;

  [[nodiscard]] bool all_uniform() const;
};

/// Polygon classes group tiles by side count (ascending); position classes
/// are the tile indices of the cluster.
ClassIncidence class_incidence(TessKind kind, Granularity granularity);

/// The class LP: variable y_a is the selected share of class a among all
/// tiles. For each class a,
///   (d_a - floor(d_a/2)) y_a + sum_b incidence[b][a] y_b <= d_a count_a / C
/// and y_a <= count_a / C; maximise sum_a y_a.
LinearSystem class_system(const ClassIncidence& classes);

/// Exact optimum of class_system. A polygon request with a non-uniform class
/// is answered at position granularity; the report's granularity field says
/// which one was used.
BoundReport aggregated_lp_bound(TessKind kind, Granularity granularity = Granularity::polygon);

}  // namespace halfdom
