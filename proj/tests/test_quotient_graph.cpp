#include <doctest.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "halfdom/quotient_graph.hpp"

using namespace halfdom;

namespace {

int degree_sum(const QuotientGraph& g) {
  int s = 0;
  for (int v = 0; v < g.size(); ++v) s += g.degree(v);
  return s;
}

bool symmetric(const QuotientGraph& g) {
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.neighbors(v)) {
      const auto nv = g.neighbors(v);
      const auto nw = g.neighbors(w);
      if (std::count(nv.begin(), nv.end(), w) != std::count(nw.begin(), nw.end(), v)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("torus examples") {
  const auto t = build_torus(TessKind::triangular, 2, 2);
  CHECK(t.size() == 8);
  for (int v = 0; v < t.size(); ++v) CHECK(t.degree(v) == 3);
  CHECK(t.edges().size() == 12);

  const auto h = build_torus(TessKind::hexagonal, 1, 1);
  REQUIRE(h.size() == 1);
  CHECK(h.degree(0) == 6);
  CHECK(h.edges() == std::vector<std::pair<int, int>>(3, {0, 0}));

  const auto r = build_torus(TessKind::rhombitrihexagonal, 2, 2);
  CHECK(r.size() == 24);
  CHECK(degree_sum(r) == 96);
  CHECK(r.edges().size() == 48);
}

TEST_CASE("open examples") {
  CHECK(build_open(TessKind::snub_trihexagonal, 4, 3).size() == 108);
  const auto sq = build_open(TessKind::square, 2, 2);
  CHECK(sq.size() == 4);
  CHECK(sq.edges().size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(sq.degree(v) == 2);
  const auto h = build_open(TessKind::hexagonal, 1, 1);
  CHECK(h.size() == 1);
  CHECK(h.edges().empty());
  CHECK(degree_histogram(h) == std::map<int, int>{{0, 1}});
}

TEST_CASE("klein examples") {
  const auto k4 = build_klein_3_6(4);
  CHECK(k4.size() == 16);
  for (int v = 0; v < k4.size(); ++v) CHECK(k4.degree(v) == 3);
  const auto k1 = build_klein_3_6(1);
  CHECK(k1.size() == 1);
  CHECK(k1.degree(0) == 3);
  CHECK(build_klein_3_6(13).size() == 169);
  for (int n = 1; n <= 6; ++n) {
    const auto k = build_klein_3_6(n);
    CHECK(symmetric(k));
    CHECK(degree_sum(k) == 3 * n * n);
    for (const auto& rec : k.vertices()) CHECK(rec.k == 1);
  }
  CHECK_THROWS_AS(build_graph(TessKind::square, 3, 3, Quotient::klein), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(TessKind::triangular, 3, 4, Quotient::klein), std::invalid_argument);
}

TEST_CASE("degree histograms") {
  CHECK(degree_histogram(build_torus(TessKind::elongated_triangular, 3, 3)) == std::map<int, int>{{3, 18}, {4, 9}});
  CHECK(degree_histogram(build_torus(TessKind::trihexagonal, 2, 2)) == std::map<int, int>{{3, 8}, {6, 4}});
}

TEST_CASE("torus invariants for every kind") {
  for (TessKind kind : catalog()) {
    for (int m = 2; m <= 4; ++m) {
      for (int n = 2; n <= 4; ++n) {
        CAPTURE(name(kind));
        CAPTURE(m);
        CAPTURE(n);
        const auto g = build_torus(kind, m, n);
        CHECK(g.size() == m * n * cluster_spec(kind).size());
        for (const auto& rec : g.vertices()) CHECK(g.degree(rec.id) == rec.sides);
        CHECK(symmetric(g));
        CHECK(degree_sum(g) == 2 * static_cast<int>(g.edges().size()));
      }
    }
  }
}

TEST_CASE("open graph is an edge subset of the torus") {
  for (TessKind kind : catalog()) {
    CAPTURE(name(kind));
    const auto t = build_torus(kind, 4, 3);
    const auto o = build_open(kind, 4, 3);
    REQUIRE(o.size() == t.size());
    auto te = t.edges();
    for (const auto& e : o.edges()) {
      const auto it = std::find(te.begin(), te.end(), e);
      REQUIRE(it != te.end());
      te.erase(it);
    }
    for (const auto& rec : o.vertices()) {
      CHECK(o.degree(rec.id) <= rec.sides);
      const bool interior = rec.i > 0 && rec.i < 3 && rec.j > 0 && rec.j < 2;
      if (interior) CHECK(o.degree(rec.id) == rec.sides);
    }
  }
}

TEST_CASE("triangular torus matches the indexed system") {
  // Tile (i,j,1) touches (i,j,2), (i-1,j,2) and (i,j-1,2).
  const int n = 5;
  const auto g = build_torus(TessKind::triangular, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = *g.find(i, j, 1);
      std::vector<int> expected = {*g.find(i, j, 2), *g.find((i + n - 1) % n, j, 2), *g.find(i, (j + n - 1) % n, 2)};
      std::sort(expected.begin(), expected.end());
      const auto nb = g.neighbors(v);
      CHECK(std::vector<int>(nb.begin(), nb.end()) == expected);
    }
  }
}

TEST_CASE("klein identification") {
  const int n = 4;
  const auto t = build_torus(TessKind::triangular, n, n);
  const auto k = build_klein_3_6(n);
  // Representative of torus tile (i,j,kk) in the Klein quotient.
  auto rep = [&](const VertexRecord& rec) {
    if (rec.k == 1) return *k.find(rec.i, rec.j, 1);
    return *k.find((n - 1 - rec.i) % n, (n - 1 - rec.j) % n, 1);
  };
  std::vector<std::pair<int, int>> mapped;
  for (const auto& [u, w] : t.edges()) {
    int a = rep(t.vertex(u));
    int b = rep(t.vertex(w));
    if (a > b) std::swap(a, b);
    mapped.emplace_back(a, b);
  }
  std::sort(mapped.begin(), mapped.end());
  // Each undirected Klein edge is the image of two torus edges.
  std::vector<std::pair<int, int>> doubled;
  for (const auto& e : k.edges()) {
    doubled.push_back(e);
    doubled.push_back(e);
  }
  for (int v : k.half_loops()) doubled.emplace_back(v, v);
  std::sort(doubled.begin(), doubled.end());
  CHECK(mapped == doubled);
}

TEST_CASE("vertex ids are row-major") {
  const auto g = build_torus(TessKind::rhombitrihexagonal, 3, 2);
  int id = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int kk = 1; kk <= 6; ++kk) {
        CHECK(*g.find(i, j, kk) == id);
        CHECK(cluster_vertex_id(2, 6, i, j, kk) == id);
        ++id;
      }
    }
  }
}

TEST_CASE("from_parts round trip and errors") {
  const auto g = build_torus(TessKind::trihexagonal, 2, 2);
  const std::vector<VertexRecord> verts(g.vertices().begin(), g.vertices().end());
  const auto copy = QuotientGraph::from_parts(g.kind(), g.m(), g.n(), g.quotient(), verts, g.edges(), g.half_loops());
  CHECK(copy == g);
  CHECK_THROWS_AS(QuotientGraph::from_parts(g.kind(), g.m(), g.n(), g.quotient(), verts, {{0, 99}}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_torus(TessKind::square, 0, 2), std::invalid_argument);
  CHECK(parse_quotient(to_string(Quotient::klein)) == Quotient::klein);
}
