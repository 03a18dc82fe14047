#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "halfdom/linear_system.hpp"
#include "halfdom/quotient_graph.hpp"
#include "halfdom/rational.hpp"

namespace halfdom {

/// How the graph's neighbour multiset is read by the half-domination model.
///
/// shared_edge: two tiles are adjacent when they share at least one edge;
///   parallel edges collapse and a tile is never its own neighbour.
/// multiplicity: every neighbour entry counts, so a full loop on a selected
///   vertex contributes 2 and a half loop contributes 1.
enum class Adjacency { shared_edge, multiplicity };

std::string_view to_string(Adjacency a);
Adjacency parse_adjacency(std::string_view text);

/// Klein quotients count identified neighbours (multiplicity); torus and open
/// graphs use the shared-edge relation.
Adjacency default_adjacency(const QuotientGraph& graph);

/// Effective neighbourhoods of a graph under one adjacency convention.
class Neighborhoods {
 public:
  struct Entry {
    int vertex;
    int multiplicity;
  };

  Neighborhoods(const QuotientGraph& graph, Adjacency adjacency);
  explicit Neighborhoods(const QuotientGraph& graph) : Neighborhoods(graph, default_adjacency(graph)) {}

  [[nodiscard]] int size() const { return static_cast<int>(degree_.size()); }
  [[nodiscard]] Adjacency adjacency() const { return adjacency_; }
  /// d(v) under the convention (sum of multiplicities, self entries included).
  [[nodiscard]] int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  /// floor(d(v) / 2): most selected neighbours a selected vertex may have.
  [[nodiscard]] int cap(int v) const { return degree(v) / 2; }
  /// Distinct neighbours with multiplicities; may contain v itself.
  [[nodiscard]] std::span<const Entry> entries(int v) const;

 private:
  Adjacency adjacency_;
  std::vector<int> degree_;
  std::vector<int> offsets_{0};
  std::vector<Entry> flat_;
};

/// 0/1 assignment over the vertices of one graph.
class Selection {
 public:
  Selection() = default;
  explicit Selection(int vertex_count) : bits_(static_cast<std::size_t>(vertex_count), 0) {}
  static Selection from_ids(int vertex_count, std::span<const int> ids);

  [[nodiscard]] int size() const { return static_cast<int>(bits_.size()); }
  [[nodiscard]] bool contains(int v) const { return bits_[static_cast<std::size_t>(v)] != 0; }
  void set(int v, bool on = true) { bits_[static_cast<std::size_t>(v)] = on ? 1 : 0; }
  [[nodiscard]] int count() const;
  [[nodiscard]] std::vector<int> ids() const;

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Number of selected entries in v's neighbourhood (with multiplicity).
int selected_neighbors(const Neighborhoods& nb, const Selection& sel, int v);

/// True iff every selected vertex has at most floor(d/2) selected
/// neighbours. Throws std::invalid_argument on a size mismatch.
bool is_half_dependent(const Neighborhoods& nb, const Selection& sel);
bool is_half_dependent(const QuotientGraph& graph, const Selection& sel);

/// One row per vertex: (d - floor(d/2)) x_v + sum_{w ~ v} x_w <= d, with
/// self entries folded into the diagonal coefficient. Box 0 <= x <= 1 is
/// implicit in LinearSystem. Integral 0/1 points satisfy the rows exactly
/// when the selection is half-dependent.
LinearSystem constraint_system(const Neighborhoods& nb);
LinearSystem constraint_system(const QuotientGraph& graph);

/// |selected| / |V|. Throws std::invalid_argument for an empty graph.
Rational density(const QuotientGraph& graph, const Selection& sel);

struct DeficiencyReport {
  std::vector<int> delta;  // per vertex
  Rational global;         // mean of delta
};

/// delta_v = x*_v - floor(d/2) when v is selected, x*_v - d otherwise.
DeficiencyReport deficiency(const Neighborhoods& nb, const Selection& sel);
DeficiencyReport deficiency(const QuotientGraph& graph, const Selection& sel);

/// (sum_{v in S} (d + ceil(d/2)) - sum_v d) / |V|; equals the mean delta for
/// any selection.
Rational deficiency_closed_form(const Neighborhoods& nb, const Selection& sel);

}  // namespace halfdom
