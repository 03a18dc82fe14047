#include <doctest.h>

#include <map>
#include <string>

#include "halfdom/bounds.hpp"
#include "halfdom/linear_system.hpp"
#include "halfdom/quotient_graph.hpp"
#include "halfdom/solver.hpp"

using namespace halfdom;

namespace {

int class_index(const ClassIncidence& ci, const std::string& label) {
  for (std::size_t a = 0; a < ci.classes.size(); ++a) {
    if (ci.classes[a].label == label) return static_cast<int>(a);
  }
  FAIL("missing class " << label);
  return -1;
}

Rational certificate_for(const BoundReport& b, const std::string& label) {
  for (std::size_t i = 0; i < b.certificate_labels.size(); ++i) {
    if (b.certificate_labels[i] == label) return b.certificate[i];
  }
  FAIL("missing certificate entry " << label);
  return 0;
}

}  // namespace

TEST_CASE("aggregated bounds") {
  const std::map<TessKind, Rational> expected = {
      {TessKind::hexagonal, Rational(2, 3)},
      {TessKind::triangular, Rational(3, 5)},
      {TessKind::elongated_triangular, Rational(13, 21)},
      {TessKind::trihexagonal, Rational(2, 3)},
      {TessKind::rhombitrihexagonal, Rational(19, 30)},
      {TessKind::truncated_hexagonal, Rational(7, 9)},
  };
  for (const auto& [kind, value] : expected) {
    CAPTURE(name(kind));
    const auto b = aggregated_lp_bound(kind);
    CHECK(b.value == value);
    CHECK(b.provenance == Provenance::aggregated_lp);
    CHECK(b.status == Status::optimal);
  }
}

TEST_CASE("aggregated certificates") {
  const auto r = aggregated_lp_bound(TessKind::rhombitrihexagonal);
  CHECK(certificate_for(r, "triangle") == Rational(1, 5));
  CHECK(certificate_for(r, "square") == Rational(3, 10));
  CHECK(certificate_for(r, "hexagon") == Rational(2, 15));

  const auto t = aggregated_lp_bound(TessKind::trihexagonal);
  CHECK(certificate_for(t, "triangle") == Rational(2, 3));
  CHECK(certificate_for(t, "hexagon") == 0);

  // The triangle capacity 2/3 is binding for 3.12.12.
  const auto d = aggregated_lp_bound(TessKind::truncated_hexagonal);
  CHECK(certificate_for(d, "triangle") == Rational(2, 3));
  const auto ci = class_incidence(TessKind::truncated_hexagonal, Granularity::polygon);
  auto sys = class_system(ci);
  std::erase_if(sys.rows, [](const LinearRow& row) { return row.terms.size() == 1 && row.label.find("capacity") != std::string::npos; });
  const auto uncapped = lp_optimum(sys, std::vector<Rational>(ci.classes.size(), Rational(1)));
  CHECK(uncapped.value > Rational(7, 9));
}

TEST_CASE("class incidence") {
  const auto e = class_incidence(TessKind::elongated_triangular, Granularity::polygon);
  CHECK(e.all_uniform());
  const int sq = class_index(e, "square");
  const int tri = class_index(e, "triangle");
  CHECK(e.classes[static_cast<std::size_t>(sq)].count == 1);
  CHECK(e.classes[static_cast<std::size_t>(tri)].count == 2);
  CHECK(e.incidence[sq][sq] == 2);
  CHECK(e.incidence[sq][tri] == 2);
  CHECK(e.incidence[tri][sq] == 1);
  CHECK(e.incidence[tri][tri] == 2);

  const auto th = class_incidence(TessKind::trihexagonal, Granularity::polygon);
  const int h = class_index(th, "hexagon");
  const int t = class_index(th, "triangle");
  CHECK(th.incidence[h][t] == 6);
  CHECK(th.incidence[t][h] == 3);
  CHECK(th.incidence[t][t] == 0);

  const auto snub = class_incidence(TessKind::snub_trihexagonal, Granularity::polygon);
  CHECK_FALSE(snub.classes[static_cast<std::size_t>(class_index(snub, "triangle"))].uniform);
}

TEST_CASE("incidence identities for every kind") {
  for (TessKind kind : catalog()) {
    for (Granularity g : {Granularity::polygon, Granularity::position}) {
      CAPTURE(name(kind));
      CAPTURE(to_string(g));
      const auto ci = class_incidence(kind, g);
      if (g == Granularity::position) CHECK(ci.all_uniform());
      for (std::size_t a = 0; a < ci.classes.size(); ++a) {
        Rational row_sum;
        for (std::size_t b = 0; b < ci.classes.size(); ++b) {
          row_sum += ci.incidence[a][b];
          CHECK(Rational(ci.classes[a].count) * ci.incidence[a][b] ==
                Rational(ci.classes[b].count) * ci.incidence[b][a]);
        }
        if (ci.classes[a].uniform) CHECK(row_sum == ci.classes[a].degree);
      }
    }
  }
}

TEST_CASE("position bound is never weaker") {
  for (TessKind kind : catalog()) {
    CAPTURE(name(kind));
    const auto poly = aggregated_lp_bound(kind, Granularity::polygon);
    const auto pos = aggregated_lp_bound(kind, Granularity::position);
    CHECK(pos.value <= poly.value);
    CHECK(pos.granularity == "position");
  }
  const auto snub = aggregated_lp_bound(TessKind::snub_trihexagonal, Granularity::polygon);
  CHECK(snub.granularity == "position");
  CHECK_FALSE(snub.note.empty());
}

TEST_CASE("position rows sum to polygon rows") {
  for (TessKind kind : catalog()) {
    const auto poly = class_incidence(kind, Granularity::polygon);
    if (!poly.all_uniform()) continue;
    CAPTURE(name(kind));
    const auto pos = class_incidence(kind, Granularity::position);
    // Map each position class to its polygon class by side count.
    const auto& spec = cluster_spec(kind);
    auto polygon_of = [&](std::size_t p) {
      const int sides = spec.tiles[p].sides;
      for (std::size_t a = 0; a < poly.classes.size(); ++a) {
        if (poly.classes[a].degree == sides) return a;
      }
      return poly.classes.size();
    };
    for (std::size_t a = 0; a < poly.classes.size(); ++a) {
      for (std::size_t b = 0; b < poly.classes.size(); ++b) {
        // Total a-b incidences per cluster, counted from position classes.
        Rational total;
        for (std::size_t p = 0; p < pos.classes.size(); ++p) {
          if (polygon_of(p) != a) continue;
          for (std::size_t q = 0; q < pos.classes.size(); ++q) {
            if (polygon_of(q) == b) total += Rational(pos.classes[p].count) * pos.incidence[p][q];
          }
        }
        CHECK(total == Rational(poly.classes[a].count) * poly.incidence[a][b]);
      }
    }
  }
}

TEST_CASE("aggregated bounds dominate exact densities") {
  for (TessKind kind : catalog()) {
    const auto b = aggregated_lp_bound(kind);
    for (int n = 2; n <= 3; ++n) {
      const auto g = build_torus(kind, n, n);
      if (g.size() > 60) continue;
      CAPTURE(name(kind));
      CAPTURE(n);
      SolveOptions opts;
      opts.time_limit = std::chrono::seconds(20);
      const auto r = solve_exact(g, opts);
      CHECK(r.density <= b.value);
    }
  }
}

TEST_CASE("sharp constructions") {
  // 3.6.3.6: all triangles reach 2/3, meeting the aggregated bound.
  {
    const auto g = build_torus(TessKind::trihexagonal, 4, 4);
    Selection sel(g.size());
    for (const auto& rec : g.vertices()) sel.set(rec.id, rec.sides == 3);
    CHECK(is_half_dependent(g, sel));
    CHECK(density(g, sel) == Rational(2, 3));
    CHECK(density(g, sel) == aggregated_lp_bound(TessKind::trihexagonal).value);
  }
  // 3.3.4.3.4: all triangles at 2/3.
  {
    const auto g = build_torus(TessKind::snub_square, 4, 4);
    Selection sel(g.size());
    for (const auto& rec : g.vertices()) sel.set(rec.id, rec.sides == 3);
    CHECK(is_half_dependent(g, sel));
    CHECK(density(g, sel) == Rational(2, 3));
  }
  // 4.6.12: squares and hexagons at 5/6.
  {
    const auto g = build_torus(TessKind::truncated_trihexagonal, 4, 4);
    Selection sel(g.size());
    for (const auto& rec : g.vertices()) sel.set(rec.id, rec.sides != 12);
    CHECK(is_half_dependent(g, sel));
    CHECK(density(g, sel) == Rational(5, 6));
  }
  // 4.8.8: all squares plus a checkerboard of octagons at 3/4.
  {
    const auto g = build_torus(TessKind::truncated_square, 4, 4);
    Selection sel(g.size());
    for (const auto& rec : g.vertices()) sel.set(rec.id, rec.sides == 4 || (rec.i + rec.j) % 2 == 0);
    CHECK(is_half_dependent(g, sel));
    CHECK(density(g, sel) == Rational(3, 4));
  }
}

TEST_CASE("granularity strings") {
  CHECK(parse_granularity("position") == Granularity::position);
  CHECK_THROWS_AS(parse_granularity("cell"), std::invalid_argument);
}
