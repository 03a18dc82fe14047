#include "halfdom/tessellation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace halfdom {

namespace {

struct KindInfo {
  TessKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 11> kKinds{{
    {TessKind::square, "4.4.4.4"},
    {TessKind::hexagonal, "6.6.6"},
    {TessKind::triangular, "3.3.3.3.3.3"},
    {TessKind::elongated_triangular, "3.3.3.4.4"},
    {TessKind::trihexagonal, "3.6.3.6"},
    {TessKind::rhombitrihexagonal, "3.4.6.4"},
    {TessKind::truncated_square, "4.8.8"},
    {TessKind::truncated_trihexagonal, "4.6.12"},
    {TessKind::truncated_hexagonal, "3.12.12"},
    {TessKind::snub_square, "3.3.4.3.4"},
    {TessKind::snub_trihexagonal, "3.3.3.3.6"},
}};

constexpr std::array<TessKind, 11> kCatalog{
    TessKind::square,           TessKind::hexagonal,          TessKind::triangular,
    TessKind::elongated_triangular, TessKind::trihexagonal,   TessKind::rhombitrihexagonal,
    TessKind::truncated_square, TessKind::truncated_trihexagonal, TessKind::truncated_hexagonal,
    TessKind::snub_square,      TessKind::snub_trihexagonal,
};

std::vector<int> split_arrangement(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != '.') ++pos;
    out.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    ++pos;
  }
  return out;
}

// Rewrites UTF-8 superscript digits as "^d" so both notations share a parser.
std::string ascii_exponents(std::string_view text) {
  static const std::array<std::pair<std::string_view, char>, 10> kSuper{{
      {"⁰", '0'}, {"¹", '1'}, {"²", '2'}, {"³", '3'}, {"⁴", '4'},
      {"⁵", '5'}, {"⁶", '6'}, {"⁷", '7'}, {"⁸", '8'}, {"⁹", '9'},
  }};
  std::string out;
  bool in_super = false;
  for (std::size_t pos = 0; pos < text.size();) {
    bool matched = false;
    for (const auto& [glyph, digit] : kSuper) {
      if (text.substr(pos, glyph.size()) == glyph) {
        if (!in_super) out += '^';
        out += digit;
        in_super = true;
        pos += glyph.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (in_super) out += ',';
    in_super = false;
    out += text[pos++];
  }
  return out;
}

std::optional<std::vector<int>> parse_sequence(std::string_view raw) {
  const std::string text = ascii_exponents(raw);
  std::vector<int> seq;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == '.' || c == ';' || c == '(' || c == ')' || c == '[' || c == ']' ||
           std::isspace(static_cast<unsigned char>(c));
  };
  auto read_int = [&](int& value) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || pos - start > 3) return false;
    value = std::stoi(text.substr(start, pos - start));
    return true;
  };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    int base = 0;
    if (!read_int(base)) return std::nullopt;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (!read_int(power) || power < 1 || power > 6) return std::nullopt;
    }
    if (pos < text.size() && !is_sep(text[pos])) return std::nullopt;
    if (base < 3) return std::nullopt;
    seq.insert(seq.end(), static_cast<std::size_t>(power), base);
  }
  if (seq.empty()) return std::nullopt;
  return seq;
}

bool same_cycle(const std::vector<int>& a, std::vector<int> b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (a == b) return true;
      std::rotate(b.begin(), b.begin() + 1, b.end());
    }
    std::reverse(b.begin(), b.end());
  }
  return false;
}

ClusterSpec make_square() {
  ClusterSpec s;
  s.kind = TessKind::square;
  s.v1 = {1.0, 0.0};
  s.v2 = {0.0, 1.0};
  s.tiles = {
      {1, 4, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}},
  };
  s.intra_edges = {};
  s.inter_edges = {{1, 1, -1, 0}, {1, 1, 0, -1}};
  return s;
}

ClusterSpec make_hexagonal() {
  ClusterSpec s;
  s.kind = TessKind::hexagonal;
  s.v1 = {1.73205080756888, 0.0};
  s.v2 = {0.866025403784439, 1.5};
  s.tiles = {
      {1, 6, {{0.866025403784439, 0.5}, {0.0, 1.0}, {-0.866025403784439, 0.5}, {-0.866025403784439, -0.5}, {0.0, -1.0}, {0.866025403784439, -0.5}}},
  };
  s.intra_edges = {};
  s.inter_edges = {{1, 1, -1, 0}, {1, 1, -1, 1}, {1, 1, 0, -1}};
  return s;
}

ClusterSpec make_triangular() {
  ClusterSpec s;
  s.kind = TessKind::triangular;
  s.v1 = {1.0, 0.0};
  s.v2 = {0.5, 0.866025403784439};
  s.tiles = {
      {1, 3, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.866025403784439}}},
      {2, 3, {{1.0, 0.0}, {1.5, 0.866025403784439}, {0.5, 0.866025403784439}}},
  };
  s.intra_edges = {{1, 2}};
  s.inter_edges = {{1, 2, -1, 0}, {1, 2, 0, -1}};
  return s;
}

ClusterSpec make_elongated_triangular() {
  ClusterSpec s;
  s.kind = TessKind::elongated_triangular;
  s.v1 = {1.0, 0.0};
  s.v2 = {0.5, 1.86602540378444};
  s.tiles = {
      {1, 4, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}},
      {2, 3, {{0.0, 1.0}, {1.0, 1.0}, {0.5, 1.86602540378444}}},
      {3, 3, {{0.5, 1.86602540378444}, {1.0, 1.0}, {1.5, 1.86602540378444}}},
  };
  s.intra_edges = {{1, 2}, {2, 3}};
  s.inter_edges = {{1, 1, -1, 0}, {1, 3, 0, -1}, {2, 3, -1, 0}};
  return s;
}

ClusterSpec make_trihexagonal() {
  ClusterSpec s;
  s.kind = TessKind::trihexagonal;
  s.v1 = {2.0, 0.0};
  s.v2 = {1.0, 1.73205080756888};
  s.tiles = {
      {1, 6, {{1.0, 0.0}, {0.5, 0.866025403784439}, {-0.5, 0.866025403784439}, {-1.0, 0.0}, {-0.500000000000001, -0.866025403784439}, {0.5, -0.866025403784439}}},
      {2, 3, {{1.0, 0.0}, {1.5, 0.866025403784439}, {0.499999999999999, 0.866025403784439}}},
      {3, 3, {{2.0, 1.73205080756888}, {1.5, 0.866025403784439}, {2.5, 0.866025403784439}}},
  };
  s.intra_edges = {{1, 2}};
  s.inter_edges = {{1, 2, -1, 0}, {1, 2, 0, -1}, {1, 3, -1, -1}, {1, 3, -1, 0}, {1, 3, 0, -1}};
  return s;
}

ClusterSpec make_rhombitrihexagonal() {
  ClusterSpec s;
  s.kind = TessKind::rhombitrihexagonal;
  s.v1 = {2.36602540378444, 1.36602540378444};
  s.v2 = {0.0, 2.73205080756888};
  s.tiles = {
      {1, 6, {{1.0, 0.0}, {0.5, 0.866025403784439}, {-0.5, 0.866025403784439}, {-1.0, 0.0}, {-0.500000000000001, -0.866025403784439}, {0.5, -0.866025403784439}}},
      {2, 4, {{1.36602540378444, 1.36602540378444}, {1.86602540378444, 2.23205080756888}, {1.0, 2.73205080756888}, {0.5, 1.86602540378444}}},
      {3, 3, {{1.0, 2.73205080756888}, {1.86602540378444, 2.23205080756888}, {1.86602540378444, 3.23205080756888}}},
      {4, 4, {{-0.5, 0.866025403784439}, {0.5, 0.866025403784439}, {0.5, 1.86602540378444}, {-0.5, 1.86602540378444}}},
      {5, 3, {{0.5, 0.866025403784439}, {1.36602540378444, 1.36602540378444}, {0.5, 1.86602540378444}}},
      {6, 4, {{0.5, 0.866025403784439}, {1.0, 0.0}, {1.86602540378444, 0.5}, {1.36602540378444, 1.36602540378444}}},
  };
  s.intra_edges = {{1, 4}, {1, 6}, {2, 3}, {2, 5}, {4, 5}, {5, 6}};
  s.inter_edges = {{1, 2, -1, 0}, {1, 2, 0, -1}, {1, 4, 0, -1}, {1, 6, -1, 0}, {3, 4, 1, 0}, {3, 6, 0, 1}};
  return s;
}

ClusterSpec make_truncated_square() {
  ClusterSpec s;
  s.kind = TessKind::truncated_square;
  s.v1 = {2.41421356237309, 0.0};
  s.v2 = {0.0, 2.41421356237309};
  s.tiles = {
      {1, 8, {{1.20710678118655, 0.5}, {0.5, 1.20710678118655}, {-0.5, 1.20710678118655}, {-1.20710678118655, 0.5}, {-1.20710678118655, -0.5}, {-0.500000000000001, -1.20710678118655}, {0.5, -1.20710678118655}, {1.20710678118655, -0.500000000000001}}},
      {2, 4, {{1.91421356237309, 1.20710678118655}, {1.20710678118655, 1.91421356237309}, {0.5, 1.20710678118655}, {1.20710678118655, 0.5}}},
  };
  s.intra_edges = {{1, 2}};
  s.inter_edges = {{1, 1, -1, 0}, {1, 1, 0, -1}, {1, 2, -1, -1}, {1, 2, -1, 0}, {1, 2, 0, -1}};
  return s;
}

ClusterSpec make_truncated_trihexagonal() {
  ClusterSpec s;
  s.kind = TessKind::truncated_trihexagonal;
  s.v1 = {4.73205080756888, 0.0};
  s.v2 = {2.36602540378444, 4.09807621135332};
  s.tiles = {
      {1, 12, {{1.86602540378444, 0.5}, {1.36602540378444, 1.36602540378444}, {0.5, 1.86602540378444}, {-0.5, 1.86602540378444}, {-1.36602540378444, 1.36602540378444}, {-1.86602540378444, 0.5}, {-1.86602540378444, -0.5}, {-1.36602540378444, -1.36602540378444}, {-0.500000000000002, -1.86602540378444}, {0.499999999999999, -1.86602540378444}, {1.36602540378444, -1.36602540378444}, {1.86602540378444, -0.500000000000002}}},
      {2, 6, {{3.36602540378444, 1.36602540378444}, {2.86602540378444, 2.23205080756888}, {1.86602540378444, 2.23205080756888}, {1.36602540378444, 1.36602540378444}, {1.86602540378444, 0.5}, {2.86602540378444, 0.5}}},
      {3, 6, {{5.73205080756888, 2.73205080756888}, {5.23205080756888, 3.59807621135332}, {4.23205080756888, 3.59807621135332}, {3.73205080756888, 2.73205080756888}, {4.23205080756888, 1.86602540378444}, {5.23205080756888, 1.86602540378444}}},
      {4, 4, {{2.86602540378444, 0.5}, {1.86602540378444, 0.5}, {1.86602540378444, -0.5}, {2.86602540378444, -0.5}}},
      {5, 4, {{1.0, 2.73205080756888}, {0.5, 1.86602540378444}, {1.36602540378444, 1.36602540378444}, {1.86602540378444, 2.23205080756888}}},
      {6, 4, {{2.86602540378444, 2.23205080756888}, {3.36602540378444, 1.36602540378444}, {4.23205080756888, 1.86602540378444}, {3.73205080756888, 2.73205080756888}}},
  };
  s.intra_edges = {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 6}};
  s.inter_edges = {{1, 2, -1, 0}, {1, 2, 0, -1}, {1, 3, -1, -1}, {1, 3, -1, 0}, {1, 3, 0, -1}, {1, 4, -1, 0}, {1, 5, 0, -1}, {1, 6, -1, 0}, {1, 6, 0, -1}, {3, 4, 0, 1}, {3, 5, 1, 0}};
  return s;
}

ClusterSpec make_truncated_hexagonal() {
  ClusterSpec s;
  s.kind = TessKind::truncated_hexagonal;
  s.v1 = {3.73205080756888, 0.0};
  s.v2 = {1.86602540378444, 3.23205080756888};
  s.tiles = {
      {1, 12, {{1.86602540378444, 0.5}, {1.36602540378444, 1.36602540378444}, {0.5, 1.86602540378444}, {-0.5, 1.86602540378444}, {-1.36602540378444, 1.36602540378444}, {-1.86602540378444, 0.5}, {-1.86602540378444, -0.5}, {-1.36602540378444, -1.36602540378444}, {-0.500000000000002, -1.86602540378444}, {0.499999999999999, -1.86602540378444}, {1.36602540378444, -1.36602540378444}, {1.86602540378444, -0.500000000000002}}},
      {2, 3, {{1.86602540378444, 0.5}, {2.36602540378444, 1.36602540378444}, {1.36602540378444, 1.36602540378444}}},
      {3, 3, {{3.23205080756888, 1.86602540378444}, {4.23205080756888, 1.86602540378444}, {3.73205080756888, 2.73205080756888}}},
  };
  s.intra_edges = {{1, 2}};
  s.inter_edges = {{1, 1, -1, 0}, {1, 1, -1, 1}, {1, 1, 0, -1}, {1, 2, -1, 0}, {1, 2, 0, -1}, {1, 3, -1, -1}, {1, 3, -1, 0}, {1, 3, 0, -1}};
  return s;
}

ClusterSpec make_snub_square() {
  ClusterSpec s;
  s.kind = TessKind::snub_square;
  s.v1 = {1.93185165257814, 0.0};
  s.v2 = {0.0, 1.93185165257814};
  s.tiles = {
      {1, 4, {{0.353553390593274, 0.612372435695795}, {-0.612372435695794, 0.353553390593274}, {-0.353553390593274, -0.612372435695794}, {0.612372435695794, -0.353553390593274}}},
      {2, 4, {{1.57829826198486, 1.31947921688234}, {0.612372435695794, 1.57829826198486}, {0.353553390593274, 0.612372435695794}, {1.31947921688234, 0.353553390593274}}},
      {3, 3, {{-0.353553390593274, 1.31947921688234}, {0.353553390593274, 0.612372435695794}, {0.612372435695794, 1.57829826198486}}},
      {4, 3, {{0.612372435695794, -0.353553390593274}, {1.31947921688234, 0.353553390593274}, {0.353553390593274, 0.612372435695794}}},
      {5, 3, {{1.57829826198486, 1.31947921688234}, {1.31947921688234, 2.28540504317141}, {0.612372435695794, 1.57829826198486}}},
      {6, 3, {{1.57829826198486, 1.31947921688234}, {1.31947921688234, 0.353553390593274}, {2.28540504317141, 0.612372435695794}}},
  };
  s.intra_edges = {{1, 4}, {2, 3}, {2, 4}, {2, 5}, {2, 6}};
  s.inter_edges = {{1, 3, 0, -1}, {1, 5, -1, -1}, {1, 6, -1, 0}, {3, 6, -1, 0}, {4, 5, 0, -1}};
  return s;
}

ClusterSpec make_snub_trihexagonal() {
  ClusterSpec s;
  s.kind = TessKind::snub_trihexagonal;
  s.v1 = {2.5, 0.866025403784439};
  s.v2 = {0.5, 2.59807621135332};
  s.tiles = {
      {1, 6, {{1.0, 0.0}, {0.5, 0.866025403784439}, {-0.5, 0.866025403784439}, {-1.0, 0.0}, {-0.500000000000001, -0.866025403784439}, {0.5, -0.866025403784439}}},
      {2, 3, {{1.0, 0.0}, {1.5, 0.866025403784439}, {0.5, 0.866025403784439}}},
      {3, 3, {{0.5, 0.866025403784439}, {1.0, 1.73205080756888}, {0.0, 1.73205080756888}}},
      {4, 3, {{0.5, 0.866025403784439}, {1.5, 0.866025403784439}, {1.0, 1.73205080756888}}},
      {5, 3, {{1.5, 2.59807621135332}, {1.0, 1.73205080756888}, {2.0, 1.73205080756888}}},
      {6, 3, {{1.5, 2.59807621135332}, {2.0, 1.73205080756888}, {2.5, 2.59807621135332}}},
      {7, 3, {{1.5, 2.59807621135332}, {2.5, 2.59807621135332}, {2.0, 3.46410161513775}}},
      {8, 3, {{1.0, 1.73205080756888}, {1.5, 0.866025403784439}, {2.0, 1.73205080756888}}},
      {9, 3, {{3.0, 1.73205080756888}, {2.5, 2.59807621135332}, {2.0, 1.73205080756888}}},
  };
  s.intra_edges = {{1, 2}, {2, 4}, {3, 4}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {6, 9}};
  s.inter_edges = {{1, 3, 0, -1}, {1, 5, 0, -1}, {1, 7, -1, -1}, {1, 8, -1, 0}, {1, 9, -1, 0}, {2, 7, 0, -1}, {3, 9, -1, 0}};
  return s;
}

std::vector<ClusterSpec> make_all() {
  return {make_square(),           make_hexagonal(),          make_triangular(),
          make_elongated_triangular(), make_trihexagonal(),   make_rhombitrihexagonal(),
          make_truncated_square(), make_truncated_trihexagonal(), make_truncated_hexagonal(),
          make_snub_square(),      make_snub_trihexagonal()};
}

}  // namespace

std::span<const TessKind> catalog() { return kCatalog; }

std::string_view name(TessKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  throw std::invalid_argument("unknown tessellation kind");
}

std::vector<int> vertex_arrangement(TessKind kind) { return split_arrangement(name(kind)); }

std::optional<TessKind> try_parse_kind(std::string_view text) {
  const auto seq = parse_sequence(text);
  if (!seq) return std::nullopt;
  for (const auto& info : kKinds) {
    if (same_cycle(split_arrangement(info.name), *seq)) return info.kind;
  }
  return std::nullopt;
}

TessKind parse_kind(std::string_view text) {
  if (auto kind = try_parse_kind(text)) return *kind;
  throw std::invalid_argument("unknown tessellation '" + std::string(text) + "'");
}

const ClusterSpec& cluster_spec(TessKind kind) {
  static const std::vector<ClusterSpec> specs = make_all();
  return specs.at(static_cast<std::size_t>(kind));
}

std::vector<std::string> validate_cluster(const ClusterSpec& spec) {
  std::vector<std::string> issues;
  const int count = spec.size();
  auto valid_tile = [&](int t) { return t >= 1 && t <= count; };

  for (int t = 0; t < count; ++t) {
    const TileSpec& tile = spec.tiles[static_cast<std::size_t>(t)];
    if (tile.index != t + 1) {
      issues.push_back("tile " + std::to_string(t + 1) + ": index out of order (" + std::to_string(tile.index) + ")");
    }
    if (tile.sides < 3) issues.push_back("tile " + std::to_string(t + 1) + ": fewer than 3 sides");
    if (!tile.outline.empty() && static_cast<int>(tile.outline.size()) != tile.sides) {
      issues.push_back("tile " + std::to_string(t + 1) + ": outline vertex count differs from sides");
    }
  }

  std::vector<int> degree(static_cast<std::size_t>(count), 0);
  for (const auto& [a, b] : spec.intra_edges) {
    if (!valid_tile(a) || !valid_tile(b)) {
      issues.push_back("intra edge references unknown tile");
      continue;
    }
    if (a == b) issues.push_back("intra edge joins tile " + std::to_string(a) + " to itself");
    ++degree[static_cast<std::size_t>(a - 1)];
    ++degree[static_cast<std::size_t>(b - 1)];
  }
  for (const auto& e : spec.inter_edges) {
    if (!valid_tile(e.a) || !valid_tile(e.b)) {
      issues.push_back("inter edge references unknown tile");
      continue;
    }
    if (e.di < -1 || e.di > 1 || e.dj < -1 || e.dj > 1) {
      issues.push_back("inter edge offset outside {-1,0,1}^2");
    }
    if (e.di == 0 && e.dj == 0) issues.push_back("inter edge with zero offset");
    ++degree[static_cast<std::size_t>(e.a - 1)];
    ++degree[static_cast<std::size_t>(e.b - 1)];
  }

  int side_total = 0;
  for (int t = 0; t < count; ++t) {
    const int sides = spec.tiles[static_cast<std::size_t>(t)].sides;
    side_total += sides;
    const int d = degree[static_cast<std::size_t>(t)];
    if (d != sides) {
      issues.push_back("tile " + std::to_string(t + 1) + ": degree ≠ sides (" + std::to_string(d) + " vs " +
                       std::to_string(sides) + ")");
    }
  }
  const auto edge_count = static_cast<int>(spec.intra_edges.size() + spec.inter_edges.size());
  if (side_total != 2 * edge_count) {
    issues.push_back("handshake: side total " + std::to_string(side_total) + " is not twice the edge count " +
                     std::to_string(edge_count));
  }

  // n_s * s must be proportional to the number of s-gons meeting at a vertex.
  std::map<int, int> at_vertex;
  for (int s : vertex_arrangement(spec.kind)) ++at_vertex[s];
  std::map<int, int> in_cluster;
  for (const auto& tile : spec.tiles) ++in_cluster[tile.sides];
  bool ratio_ok = at_vertex.size() == in_cluster.size();
  if (ratio_ok) {
    // Compare (n_s * s) / c_s across sizes by cross-multiplication.
    long ref_num = -1;
    long ref_den = 1;
    for (const auto& [s, c] : at_vertex) {
      const auto it = in_cluster.find(s);
      if (it == in_cluster.end()) {
        ratio_ok = false;
        break;
      }
      const long num = static_cast<long>(it->second) * s;
      if (ref_num < 0) {
        ref_num = num;
        ref_den = c;
      } else if (num * ref_den != ref_num * c) {
        ratio_ok = false;
        break;
      }
    }
  }
  if (!ratio_ok) issues.push_back("tile counts: ratio violates vertex-configuration identity");
  return issues;
}

}  // namespace halfdom
