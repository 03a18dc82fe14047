// halfdom: command-line front end for the half-domination toolkit.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
// 3 search budget exhausted (only with --strict).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "halfdom/bounds.hpp"
#include "halfdom/io.hpp"
#include "halfdom/render.hpp"
#include "halfdom/solver.hpp"
#include "halfdom/tables.hpp"

using namespace halfdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct GraphSource {
  std::string file;
  std::string kind;
  int m = 0;
  int n = 0;
  std::string quotient = "torus";

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", file, "Graph document (JSON)");
    cmd->add_option("--kind", kind, "Tessellation, e.g. 3.3.3.4.4 (instead of --graph)");
    cmd->add_option("--m", m, "Cluster rows");
    cmd->add_option("--n", n, "Cluster columns");
    cmd->add_option("--quotient", quotient, "open, torus or klein")->capture_default_str();
  }

  [[nodiscard]] QuotientGraph load() const {
    if (!file.empty()) return graph_from_json(read_document(file));
    if (kind.empty()) throw CLI::ValidationError("graph", "give --graph FILE or --kind with --m/--n");
    const int rows = m > 0 ? m : n;
    const int cols = n > 0 ? n : m;
    if (rows <= 0) throw CLI::ValidationError("graph", "--m/--n must be positive");
    return build_graph(parse_kind(kind), rows, cols, parse_quotient(quotient));
  }
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << text;
}

std::optional<std::chrono::duration<double>> seconds(double limit) {
  if (limit <= 0) return std::nullopt;
  return std::chrono::duration<double>(limit);
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad vertex id '" + item + "'");
    ids.push_back(v);
  }
  return ids;
}

void print_graph_line(const QuotientGraph& g) {
  std::cout << "graph " << name(g.kind()) << " " << to_string(g.quotient()) << " " << g.m() << "x" << g.n()
            << " |V|=" << g.size() << "\n";
}

void print_bound(const BoundReport& b) {
  std::cout << "bound " << b.value << "\n";
  std::cout << "provenance " << to_string(b.provenance) << "\n";
  std::cout << "status " << to_string(b.status) << "\n";
  if (!b.granularity.empty()) std::cout << "granularity " << b.granularity << "\n";
  if (!b.certificate_labels.empty()) {
    for (std::size_t i = 0; i < b.certificate.size(); ++i) {
      std::cout << "certificate " << b.certificate_labels[i] << " = " << b.certificate[i] << "\n";
    }
  }
  if (!b.note.empty()) std::cout << "note " << b.note << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact half-domination densities of plane tessellations"};
  app.require_subcommand(1);

  // tess
  auto* tess = app.add_subcommand("tess", "Tessellation catalog");
  tess->require_subcommand(1);
  auto* tess_list = tess->add_subcommand("list", "List the eleven tessellations");
  auto* tess_show = tess->add_subcommand("show", "Show one cluster");
  std::string show_kind;
  tess_show->add_option("kind,--kind", show_kind, "Tessellation name or alias")->required();

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Quotient graphs");
  graph_cmd->require_subcommand(1);
  auto* graph_build = graph_cmd->add_subcommand("build", "Build and write a graph document");
  GraphSource build_src;
  std::string build_out;
  graph_build->add_option("--kind", build_src.kind, "Tessellation")->required();
  graph_build->add_option("--m", build_src.m, "Cluster rows")->required();
  graph_build->add_option("--n", build_src.n, "Cluster columns")->required();
  graph_build->add_option("--quotient", build_src.quotient, "open, torus or klein")->capture_default_str();
  graph_build->add_option("--out", build_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Maximum half-dependent set");
  GraphSource solve_src;
  solve_src.attach(solve);
  std::string method = "auto";
  std::string adjacency;
  double time_limit = 0;
  bool deterministic = false;
  bool strict = false;
  std::string target;
  int threads = 1;
  std::string solve_out;
  solve->add_option("--method", method, "auto, brute or bnb")->capture_default_str();
  solve->add_option("--adjacency", adjacency, "shared-edge or multiplicity (default per quotient)");
  solve->add_option("--time-limit", time_limit, "Seconds; 0 means unlimited");
  solve->add_flag("--deterministic", deterministic, "Return the lexicographically smallest optimum");
  solve->add_option("--target", target, "Stop once this density (p/q) is reached");
  solve->add_option("--threads", threads, "Worker threads")->capture_default_str();
  solve->add_flag("--strict", strict, "Exit 3 when the search did not finish");
  solve->add_option("--out", solve_out, "Write the witness selection document here");

  // check
  auto* check = app.add_subcommand("check", "Verify a selection");
  GraphSource check_src;
  check_src.attach(check);
  std::string check_sel;
  std::string check_adjacency;
  check->add_option("--selection", check_sel, "Selection document")->required();
  check->add_option("--adjacency", check_adjacency, "shared-edge or multiplicity (default per quotient)");

  // bound
  auto* bound = app.add_subcommand("bound", "Density upper bounds");
  bound->require_subcommand(1);
  auto* b_agg = bound->add_subcommand("aggregate", "Aggregated class LP");
  std::string agg_kind;
  std::string granularity = "polygon";
  std::string bound_out;
  b_agg->add_option("--kind", agg_kind, "Tessellation")->required();
  b_agg->add_option("--granularity", granularity, "polygon or position")->capture_default_str();
  b_agg->add_option("--out", bound_out, "Write the bound document here");

  auto* b_lp = bound->add_subcommand("lp", "LP relaxation of the full vertex system");
  GraphSource lp_src;
  lp_src.attach(b_lp);
  b_lp->add_option("--out", bound_out, "Write the bound document here");

  auto* b_pin = bound->add_subcommand("pinned", "Maximum with vertices forced out");
  GraphSource pin_src;
  pin_src.attach(b_pin);
  std::string zero_ids;
  std::string zero_file;
  double pin_limit = 0;
  b_pin->add_option("--zero", zero_ids, "Comma-separated vertex ids to force out");
  b_pin->add_option("--zero-file", zero_file, "Selection document listing the vertices to force out");
  b_pin->add_option("--time-limit", pin_limit, "Seconds; 0 means unlimited");
  b_pin->add_option("--threads", threads, "Worker threads");
  b_pin->add_flag("--strict", strict, "Exit 3 when the search did not finish");
  b_pin->add_option("--out", bound_out, "Write the bound document here");

  auto* b_w = bound->add_subcommand("weighted", "Weighted density bound");
  GraphSource w_src;
  w_src.attach(b_w);
  std::string weights = "interior";
  std::string mode = "lp";
  double w_limit = 0;
  b_w->add_option("--weights", weights, "interior, uniform, or a JSON array of fractions")->capture_default_str();
  b_w->add_option("--mode", mode, "lp or integer")->capture_default_str();
  b_w->add_option("--time-limit", w_limit, "Seconds (integer mode); 0 means unlimited");
  b_w->add_option("--threads", threads, "Worker threads");
  b_w->add_flag("--strict", strict, "Exit 3 when the search did not finish");
  b_w->add_option("--out", bound_out, "Write the bound document here");

  // table
  auto* table = app.add_subcommand("table", "Reproduce a reference table");
  std::string table_id;
  int max_n = 0;
  double table_limit = 0;
  std::string table_out;
  table->add_option("--id", table_id, "t36_torus, t36_klein, t3344_torus, t3464_torus or bounds_all")->required();
  table->add_option("--max-n", max_n, "Largest n (0 = table default)");
  table->add_option("--time-limit", table_limit, "Seconds per cell; 0 means unlimited");
  table->add_option("--threads", threads, "Worker threads");
  table->add_flag("--deterministic", deterministic, "Lexicographically smallest witnesses");
  table->add_option("--out", table_out, "Write the table document here");

  // render
  auto* render = app.add_subcommand("render", "Draw a graph and selection as SVG");
  GraphSource render_src;
  render_src.attach(render);
  std::string render_sel;
  std::string render_out;
  int width = 800;
  render->add_option("--selection", render_sel, "Selection document");
  render->add_option("--out", render_out, "SVG file (default stdout)");
  render->add_option("--width", width, "Width in pixels")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (tess_list->parsed()) {
      for (TessKind k : catalog()) {
        const ClusterSpec& spec = cluster_spec(k);
        std::cout << name(k) << "  tiles/cluster=" << spec.size() << "\n";
      }
      return kExitOk;
    }
    if (tess_show->parsed()) {
      const TessKind k = parse_kind(show_kind);
      const ClusterSpec& spec = cluster_spec(k);
      std::cout << "kind " << name(k) << "\n";
      std::cout << "v1 " << spec.v1.x << " " << spec.v1.y << "\nv2 " << spec.v2.x << " " << spec.v2.y << "\n";
      for (const auto& t : spec.tiles) std::cout << "tile " << t.index << " sides " << t.sides << "\n";
      for (const auto& [a, b] : spec.intra_edges) std::cout << "intra " << a << " " << b << "\n";
      for (const auto& e : spec.inter_edges) {
        std::cout << "inter " << e.a << " " << e.b << " (" << e.di << "," << e.dj << ")\n";
      }
      const auto problems = validate_cluster(spec);
      for (const auto& p : problems) std::cout << "invalid " << p << "\n";
      if (problems.empty()) std::cout << "valid\n";
      return problems.empty() ? kExitOk : kExitMismatch;
    }
    if (graph_build->parsed()) {
      const QuotientGraph g = build_graph(parse_kind(build_src.kind), build_src.m, build_src.n,
                                          parse_quotient(build_src.quotient));
      emit(build_out, dump_document(graph_to_json(g)));
      return kExitOk;
    }
    if (solve->parsed()) {
      const QuotientGraph g = solve_src.load();
      SolveOptions opts;
      opts.method = parse_method(method);
      if (!adjacency.empty()) opts.adjacency = parse_adjacency(adjacency);
      opts.time_limit = seconds(time_limit);
      opts.deterministic = deterministic;
      if (!target.empty()) opts.target = Rational::parse(target);
      opts.threads = threads;
      const OptResult r = solve_exact(g, opts);
      print_graph_line(g);
      std::cout << "cardinality " << r.best_cardinality << "\n";
      std::cout << "density " << r.density << "\n";
      std::cout << "status " << to_string(r.status) << "\n";
      if (r.status != Status::optimal) {
        std::cout << "upper_bound " << Rational(r.objective_upper_bound, g.size()) << "\n";
      }
      if (opts.target) std::cout << "target " << (r.target_reached ? "reached" : "not reached") << "\n";
      std::cout << "method " << to_string(r.method_used) << "\n";
      std::cout << "nodes " << r.nodes << "\n";
      std::fprintf(stdout, "elapsed %.3fs\n", r.elapsed.count());
      if (!solve_out.empty()) write_document(solve_out, selection_to_json(g, r.witness));
      if (opts.target && r.target_reached) return kExitOk;
      if (strict && r.status != Status::optimal) return kExitBudget;
      return kExitOk;
    }
    if (check->parsed()) {
      const QuotientGraph g = check_src.load();
      const Selection sel = selection_from_json(read_document(check_sel), g);
      const Adjacency adj = check_adjacency.empty() ? default_adjacency(g) : parse_adjacency(check_adjacency);
      const Neighborhoods nb(g, adj);
      const bool ok = is_half_dependent(nb, sel);
      const DeficiencyReport def = deficiency(nb, sel);
      print_graph_line(g);
      std::cout << "selected " << sel.count() << "\n";
      std::cout << "density " << density(g, sel) << "\n";
      std::cout << "half_dependent " << (ok ? "yes" : "no") << "\n";
      std::cout << "global_deficiency " << def.global << "\n";
      return ok ? kExitOk : kExitMismatch;
    }
    if (b_agg->parsed()) {
      const BoundReport b = aggregated_lp_bound(parse_kind(agg_kind), parse_granularity(granularity));
      print_bound(b);
      if (!bound_out.empty()) write_document(bound_out, bound_to_json(b));
      return kExitOk;
    }
    if (b_lp->parsed()) {
      const QuotientGraph g = lp_src.load();
      const LpSolution lp = lp_optimum(constraint_system(g), std::vector<Rational>(static_cast<std::size_t>(g.size()),
                                                                                   Rational(1)));
      BoundReport b;
      b.value = lp.value / Rational(g.size());
      b.provenance = Provenance::weighted_lp;
      b.note = "uniform weights";
      print_graph_line(g);
      print_bound(b);
      if (!bound_out.empty()) write_document(bound_out, bound_to_json(b));
      return kExitOk;
    }
    if (b_pin->parsed()) {
      const QuotientGraph g = pin_src.load();
      std::vector<int> zeros = parse_id_list(zero_ids);
      if (!zero_file.empty()) {
        const Selection z = selection_from_json(read_document(zero_file), g);
        for (int v : z.ids()) zeros.push_back(v);
      }
      SolveOptions opts;
      opts.time_limit = seconds(pin_limit);
      opts.threads = threads;
      const BoundReport b = pinned_density_bound(g, zeros, opts);
      print_graph_line(g);
      print_bound(b);
      if (!bound_out.empty()) write_document(bound_out, bound_to_json(b));
      return strict && b.status != Status::optimal ? kExitBudget : kExitOk;
    }
    if (b_w->parsed()) {
      const QuotientGraph g = w_src.load();
      std::vector<Rational> w;
      if (weights == "interior") {
        w = interior_weights(g);
      } else if (weights == "uniform") {
        w.assign(static_cast<std::size_t>(g.size()), Rational(1));
      } else {
        const auto doc = read_document(weights);
        if (!doc.is_array()) throw FormatError("$: expected an array of fractions");
        for (std::size_t i = 0; i < doc.size(); ++i) {
          if (!doc[i].is_string()) throw FormatError("$[" + std::to_string(i) + "]: expected a fraction string");
          w.push_back(Rational::parse(doc[i].get<std::string>()));
        }
      }
      SolveOptions opts;
      opts.time_limit = seconds(w_limit);
      opts.threads = threads;
      const WeightedMode wm = mode == "integer" ? WeightedMode::integer : WeightedMode::lp;
      if (mode != "integer" && mode != "lp") throw CLI::ValidationError("--mode", "expected lp or integer");
      const BoundReport b = weighted_density_bound(g, w, wm, opts);
      print_graph_line(g);
      std::cout << "bound " << b.value << "\n";
      std::cout << "provenance " << to_string(b.provenance) << "\n";
      std::cout << "status " << to_string(b.status) << "\n";
      if (!b.note.empty()) std::cout << "note " << b.note << "\n";
      if (!bound_out.empty()) write_document(bound_out, bound_to_json(b));
      return strict && b.status != Status::optimal ? kExitBudget : kExitOk;
    }
    if (table->parsed()) {
      TableSpec spec;
      spec.id = parse_table_id(table_id);
      if (max_n > 0) spec.max_n = max_n;
      spec.time_limit = seconds(table_limit);
      spec.threads = threads;
      spec.deterministic = deterministic;
      const TableReport report = reproduce_table(spec);
      std::cout << format_table(report);
      if (!table_out.empty()) write_document(table_out, table_to_json(report));
      return report.any_differs() ? kExitMismatch : kExitOk;
    }
    if (render->parsed()) {
      const QuotientGraph g = render_src.load();
      std::optional<Selection> sel;
      if (!render_sel.empty()) sel = selection_from_json(read_document(render_sel), g);
      RenderSpec rs;
      rs.graph = &g;
      rs.selection = sel ? &*sel : nullptr;
      rs.width = width;
      emit(render_out, render_svg(rs));
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
