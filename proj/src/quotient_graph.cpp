#include "halfdom/quotient_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace halfdom {

namespace {

int wrap(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

void require_dims(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
}

std::vector<VertexRecord> cluster_grid(TessKind kind, int m, int n) {
  const ClusterSpec& spec = cluster_spec(kind);
  std::vector<VertexRecord> out;
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n) * spec.tiles.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& tile : spec.tiles) {
        out.push_back({static_cast<int>(out.size()), i, j, tile.index, tile.sides});
      }
    }
  }
  return out;
}

// Shared by torus and open: open drops every inter-cluster edge that leaves the grid.
std::vector<std::vector<int>> grid_adjacency(TessKind kind, int m, int n, bool wrap_around) {
  const ClusterSpec& spec = cluster_spec(kind);
  const int c = spec.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m * n * c));
  auto link = [&](int u, int w) {
    adj[static_cast<std::size_t>(u)].push_back(w);
    adj[static_cast<std::size_t>(w)].push_back(u);
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& [a, b] : spec.intra_edges) {
        link(cluster_vertex_id(n, c, i, j, a), cluster_vertex_id(n, c, i, j, b));
      }
      for (const auto& e : spec.inter_edges) {
        int ti = i + e.di;
        int tj = j + e.dj;
        if (wrap_around) {
          ti = wrap(ti, m);
          tj = wrap(tj, n);
        } else if (ti < 0 || ti >= m || tj < 0 || tj >= n) {
          continue;
        }
        link(cluster_vertex_id(n, c, i, j, e.a), cluster_vertex_id(n, c, ti, tj, e.b));
      }
    }
  }
  return adj;
}

}  // namespace

std::string_view to_string(Quotient q) {
  switch (q) {
    case Quotient::open:
      return "open";
    case Quotient::torus:
      return "torus";
    case Quotient::klein:
      return "klein";
  }
  return "?";
}

Quotient parse_quotient(std::string_view text) {
  if (text == "open") return Quotient::open;
  if (text == "torus") return Quotient::torus;
  if (text == "klein") return Quotient::klein;
  throw std::invalid_argument("unknown quotient '" + std::string(text) + "'");
}

int cluster_vertex_id(int n, int cluster_size, int i, int j, int k) {
  return (i * n + j) * cluster_size + (k - 1);
}

QuotientGraph::QuotientGraph(TessKind kind, int m, int n, Quotient quotient, std::vector<VertexRecord> vertices,
                             std::vector<std::vector<int>> adjacency)
    : kind_(kind), m_(m), n_(n), quotient_(quotient), vertices_(std::move(vertices)) {
  offsets_.reserve(adjacency.size() + 1);
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    flat_.insert(flat_.end(), list.begin(), list.end());
    offsets_.push_back(static_cast<int>(flat_.size()));
  }
}

QuotientGraph QuotientGraph::from_parts(TessKind kind, int m, int n, Quotient quotient,
                                        std::vector<VertexRecord> vertices,
                                        const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<int>& half_loops) {
  require_dims(m, n);
  const int count = static_cast<int>(vertices.size());
  for (int v = 0; v < count; ++v) {
    if (vertices[static_cast<std::size_t>(v)].id != v) {
      throw std::invalid_argument("vertex table must list ids 0.." + std::to_string(count - 1) + " in order");
    }
  }
  auto check = [&](int v) {
    if (v < 0 || v >= count) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
  };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
  for (const auto& [u, w] : edges) {
    check(u);
    check(w);
    adj[static_cast<std::size_t>(u)].push_back(w);
    adj[static_cast<std::size_t>(w)].push_back(u);
  }
  for (int v : half_loops) {
    check(v);
    adj[static_cast<std::size_t>(v)].push_back(v);
  }
  return QuotientGraph(kind, m, n, quotient, std::move(vertices), std::move(adj));
}

std::span<const int> QuotientGraph::neighbors(int v) const {
  const auto begin = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(flat_).subspan(begin, end - begin);
}

std::optional<int> QuotientGraph::find(int i, int j, int k) const {
  for (const auto& rec : vertices_) {
    if (rec.i == i && rec.j == j && rec.k == k) return rec.id;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> QuotientGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    int self = 0;
    for (int w : neighbors(u)) {
      if (w > u) out.emplace_back(u, w);
      if (w == u) ++self;
    }
    for (int t = 0; t < self / 2; ++t) out.emplace_back(u, u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> QuotientGraph::half_loops() const {
  std::vector<int> out;
  for (int u = 0; u < size(); ++u) {
    const auto nb = neighbors(u);
    if (std::count(nb.begin(), nb.end(), u) % 2 == 1) out.push_back(u);
  }
  return out;
}

bool operator==(const QuotientGraph& a, const QuotientGraph& b) {
  return a.kind_ == b.kind_ && a.m_ == b.m_ && a.n_ == b.n_ && a.quotient_ == b.quotient_ &&
         a.vertices_ == b.vertices_ && a.offsets_ == b.offsets_ && a.flat_ == b.flat_;
}

QuotientGraph build_torus(TessKind kind, int m, int n) {
  require_dims(m, n);
  return QuotientGraph(kind, m, n, Quotient::torus, cluster_grid(kind, m, n), grid_adjacency(kind, m, n, true));
}

QuotientGraph build_open(TessKind kind, int m, int n) {
  require_dims(m, n);
  return QuotientGraph(kind, m, n, Quotient::open, cluster_grid(kind, m, n), grid_adjacency(kind, m, n, false));
}

QuotientGraph build_klein_3_6(int n) {
  require_dims(n, n);
  const QuotientGraph torus = build_torus(TessKind::triangular, n, n);
  // Upper triangle (i, j, 2) collapses onto lower triangle (n-1-i, n-1-j, 1).
  auto representative = [n](const VertexRecord& rec) {
    if (rec.k == 1) return rec.i * n + rec.j;
    return wrap(n - 1 - rec.i, n) * n + wrap(n - 1 - rec.j, n);
  };
  std::vector<VertexRecord> vertices;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int id = i * n + j;
      vertices.push_back({id, i, j, 1, 3});
      const int lower = cluster_vertex_id(n, 2, i, j, 1);
      for (int w : torus.neighbors(lower)) {
        adj[static_cast<std::size_t>(id)].push_back(representative(torus.vertex(w)));
      }
    }
  }
  return QuotientGraph(TessKind::triangular, n, n, Quotient::klein, std::move(vertices), std::move(adj));
}

QuotientGraph build_graph(TessKind kind, int m, int n, Quotient quotient) {
  switch (quotient) {
    case Quotient::open:
      return build_open(kind, m, n);
    case Quotient::torus:
      return build_torus(kind, m, n);
    case Quotient::klein:
      if (kind != TessKind::triangular) {
        throw std::invalid_argument("klein quotient is only defined for 3.3.3.3.3.3");
      }
      if (m != n) throw std::invalid_argument("klein quotient needs m == n");
      return build_klein_3_6(n);
  }
  throw std::invalid_argument("unknown quotient");
}

std::map<int, int> degree_histogram(const QuotientGraph& graph) {
  std::map<int, int> out;
  for (int v = 0; v < graph.size(); ++v) ++out[graph.degree(v)];
  return out;
}

}  // namespace halfdom
