#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "halfdom/tessellation.hpp"

namespace halfdom {

enum class Quotient { open, torus, klein };

std::string_view to_string(Quotient q);
Quotient parse_quotient(std::string_view text);

struct VertexRecord {
  int id = 0;
  int i = 0;
  int j = 0;
  int k = 0;      // 1-based tile index within the cluster
  int sides = 0;  // polygon side count

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// Tile-adjacency multigraph of an m x n block of clusters.
///
/// Each vertex keeps one neighbour entry per shared polygon side, so a
/// parallel edge appears twice and a full self-loop puts the vertex twice in
/// its own list. The Klein quotient can also produce a single self entry
/// ("half loop") when the identification maps an edge onto itself.
class QuotientGraph {
 public:
  QuotientGraph() = default;

  /// Assembles a graph from explicit parts. Edges are unordered pairs with
  /// repetition; (v, v) is a full loop. Throws std::invalid_argument on
  /// out-of-range ids or a vertex table that is not dense and ordered.
  static QuotientGraph from_parts(TessKind kind, int m, int n, Quotient quotient,
                                  std::vector<VertexRecord> vertices,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& half_loops);

  [[nodiscard]] TessKind kind() const { return kind_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] Quotient quotient() const { return quotient_; }
  [[nodiscard]] int size() const { return static_cast<int>(vertices_.size()); }

  [[nodiscard]] std::span<const VertexRecord> vertices() const { return vertices_; }
  [[nodiscard]] const VertexRecord& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }

  /// Neighbour multiset, sorted ascending.
  [[nodiscard]] std::span<const int> neighbors(int v) const;
  [[nodiscard]] int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  [[nodiscard]] std::optional<int> find(int i, int j, int k) const;

  /// Edge list with repetition: u <= w, full loops as (v, v).
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
  /// Vertices carrying an odd number of self entries, once per odd entry.
  [[nodiscard]] std::vector<int> half_loops() const;

  friend bool operator==(const QuotientGraph& a, const QuotientGraph& b);

 private:
  QuotientGraph(TessKind kind, int m, int n, Quotient quotient, std::vector<VertexRecord> vertices,
                std::vector<std::vector<int>> adjacency);

  TessKind kind_ = TessKind::square;
  int m_ = 0;
  int n_ = 0;
  Quotient quotient_ = Quotient::torus;
  std::vector<VertexRecord> vertices_;
  std::vector<int> offsets_{0};
  std::vector<int> flat_;

  friend QuotientGraph build_torus(TessKind, int, int);
  friend QuotientGraph build_open(TessKind, int, int);
  friend QuotientGraph build_klein_3_6(int);
};

/// Vertex id of (i, j, k) in the row-major layout used by torus and open graphs.
int cluster_vertex_id(int n, int cluster_size, int i, int j, int k);

QuotientGraph build_torus(TessKind kind, int m, int n);
QuotientGraph build_open(TessKind kind, int m, int n);
/// Triangular tiling on an n x n torus with tile (i, j, 2) identified with
/// (n-1-i, n-1-j, 1); the representatives keep tile index 1.
QuotientGraph build_klein_3_6(int n);

/// Dispatches on the quotient. Klein requires the triangular kind and m == n.
QuotientGraph build_graph(TessKind kind, int m, int n, Quotient quotient);

/// Degree -> number of vertices; a full loop contributes 2 to the degree.
std::map<int, int> degree_histogram(const QuotientGraph& graph);

}  // namespace halfdom
