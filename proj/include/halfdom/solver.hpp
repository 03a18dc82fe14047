#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfdom/halfdom.hpp"
#include "halfdom/quotient_graph.hpp"
#include "halfdom/rational.hpp"

namespace halfdom {

enum class Method { automatic, brute, bnb };
enum class Status { optimal, lower_bound_only };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);
std::string_view to_string(Status s);
Status parse_status(std::string_view text);

/// Largest graph brute force accepts.
inline constexpr int kBruteLimit = 30;
/// Graphs up to this size go to brute force under Method::automatic.
inline constexpr int kAutoBruteLimit = 20;

struct SolveOptions {
  Method method = Method::automatic;
  /// Defaults to default_adjacency(graph).
  std::optional<Adjacency> adjacency;
  /// Wall-clock limit; unset means unlimited.
  std::optional<std::chrono::duration<double>> time_limit;
  /// Return the lexicographically smallest optimal witness (smallest first
  /// selected id, then next, ...), independent of thread count.
  bool deterministic = false;
  /// Stop as soon as a selection of at least this density is known.
  std::optional<Rational> target;
  int threads = 1;
  /// Vertices that must stay unselected.
  std::vector<int> forced_zero;
  /// Non-negative integer objective weights; empty means all ones. Vertices
  /// of weight 0 are never selected.
  std::vector<std::int64_t> weights;
  /// Root-level translation symmetry breaking (torus, unit weights, no pins).
  bool symmetry_breaking = true;
  /// Seed the incumbent by lifting optima of smaller divisor tori.
  bool periodic_lift = true;
};

struct OptResult {
  int best_cardinality = 0;
  std::int64_t objective = 0;  // weighted value of the witness (= cardinality for unit weights)
  Selection witness;
  Status status = Status::lower_bound_only;
  Rational density;  // best_cardinality / |V|
  /// Proven bound on the objective; equals objective when optimal.
  std::int64_t objective_upper_bound = 0;
  bool target_reached = false;
  /// Whether the witness is the lexicographically smallest optimum.
  bool lexicographic = false;
  Method method_used = Method::bnb;
  long nodes = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Maximum half-dependent set. Throws std::invalid_argument for brute force
/// above kBruteLimit vertices, bad pins, or bad weights.
OptResult solve_exact(const QuotientGraph& graph, const SolveOptions& options = {});

enum class Provenance { aggregated_lp, pinned, weighted_lp, weighted_ilp, solver_exact };
std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

/// A density upper bound (or exact value) with where it came from.
struct BoundReport {
  Rational value;
  Provenance provenance = Provenance::solver_exact;
  Status status = Status::optimal;
  /// Class densities, LP primal, or inner witness indicator, by provenance.
  std::vector<Rational> certificate;
  std::vector<std::string> certificate_labels;
  std::string granularity;  // aggregated bounds only
  std::string note;
  std::optional<OptResult> inner;
};

/// best cardinality with zero_set forced off, divided by |V| - |zero_set|.
/// Throws std::invalid_argument when every vertex is pinned.
BoundReport pinned_density_bound(const QuotientGraph& graph, const std::vector<int>& zero_set,
                                 const SolveOptions& options = {});

enum class WeightedMode { lp, integer };

/// max sum w_v x_v over the relaxation (lp) or over half-dependent sets
/// (integer), divided by sum w_v. Weights must be non-negative and not all
/// zero; integer mode also requires them to be whole numbers.
BoundReport weighted_density_bound(const QuotientGraph& graph, const std::vector<Rational>& weights,
                                   WeightedMode mode = WeightedMode::lp, const SolveOptions& options = {});

/// Weight 1 on Klein representatives with 1 <= i, j <= n - 2, else 0.
std::vector<Rational> interior_weights(const QuotientGraph& graph);

struct TableCell {
  int m = 0;
  int n = 0;
  int vertices = 0;
  int cardinality = 0;
  Rational density;
  Status status = Status::lower_bound_only;
  Selection witness;
  std::chrono::duration<double> elapsed{0};
};

/// solve_exact for each (m, n); a cell that runs out of budget keeps its
/// incumbent with status lower_bound_only.
std::vector<TableCell> density_table(TessKind kind, Quotient quotient, const std::vector<std::pair<int, int>>& sizes,
                                     const SolveOptions& options = {});

}  // namespace halfdom
