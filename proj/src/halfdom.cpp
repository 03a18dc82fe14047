#include "halfdom/halfdom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace halfdom {

namespace {

void require_match(const Neighborhoods& nb, const Selection& sel) {
  if (sel.size() != nb.size()) {
    throw std::invalid_argument("selection has " + std::to_string(sel.size()) + " entries, graph has " +
                                std::to_string(nb.size()) + " vertices");
  }
}

}  // namespace

std::string_view to_string(Adjacency a) {
  return a == Adjacency::shared_edge ? "shared-edge" : "multiplicity";
}

Adjacency parse_adjacency(std::string_view text) {
  if (text == "shared-edge") return Adjacency::shared_edge;
  if (text == "multiplicity") return Adjacency::multiplicity;
  throw std::invalid_argument("unknown adjacency convention '" + std::string(text) + "'");
}

Adjacency default_adjacency(const QuotientGraph& graph) {
  return graph.quotient() == Quotient::klein ? Adjacency::multiplicity : Adjacency::shared_edge;
}

Neighborhoods::Neighborhoods(const QuotientGraph& graph, Adjacency adjacency) : adjacency_(adjacency) {
  degree_.reserve(static_cast<std::size_t>(graph.size()));
  for (int v = 0; v < graph.size(); ++v) {
    const auto list = graph.neighbors(v);  // sorted
    int d = 0;
    for (std::size_t p = 0; p < list.size();) {
      std::size_t q = p;
      while (q < list.size() && list[q] == list[p]) ++q;
      const int w = list[p];
      const int mult = static_cast<int>(q - p);
      if (adjacency == Adjacency::multiplicity) {
        flat_.push_back({w, mult});
        d += mult;
      } else if (w != v) {
        flat_.push_back({w, 1});
        d += 1;
      }
      p = q;
    }
    degree_.push_back(d);
    offsets_.push_back(static_cast<int>(flat_.size()));
  }
}

std::span<const Neighborhoods::Entry> Neighborhoods::entries(int v) const {
  const auto begin = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const Entry>(flat_).subspan(begin, end - begin);
}

Selection Selection::from_ids(int vertex_count, std::span<const int> ids) {
  Selection sel(vertex_count);
  for (int v : ids) {
    if (v < 0 || v >= vertex_count) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    sel.set(v);
  }
  return sel;
}

int Selection::count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<int> Selection::ids() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

int selected_neighbors(const Neighborhoods& nb, const Selection& sel, int v) {
  int total = 0;
  for (const auto& e : nb.entries(v)) {
    if (sel.contains(e.vertex)) total += e.multiplicity;
  }
  return total;
}

bool is_half_dependent(const Neighborhoods& nb, const Selection& sel) {
  require_match(nb, sel);
  for (int v = 0; v < nb.size(); ++v) {
    if (sel.contains(v) && selected_neighbors(nb, sel, v) > nb.cap(v)) return false;
  }
  return true;
}

bool is_half_dependent(const QuotientGraph& graph, const Selection& sel) {
  return is_half_dependent(Neighborhoods(graph), sel);
}

LinearSystem constraint_system(const Neighborhoods& nb) {
  LinearSystem sys;
  sys.variables = nb.size();
  sys.integral = true;
  sys.rows.reserve(static_cast<std::size_t>(nb.size()));
  for (int v = 0; v < nb.size(); ++v) {
    const int d = nb.degree(v);
    LinearRow row;
    int diagonal = d - nb.cap(v);
    for (const auto& e : nb.entries(v)) {
      if (e.vertex == v) {
        diagonal += e.multiplicity;
      } else {
        row.terms.emplace_back(e.vertex, Rational(e.multiplicity));
      }
    }
    row.terms.emplace_back(v, Rational(diagonal));
    std::sort(row.terms.begin(), row.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    row.rhs = Rational(d);
    row.label = "v" + std::to_string(v);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

LinearSystem constraint_system(const QuotientGraph& graph) { return constraint_system(Neighborhoods(graph)); }

Rational density(const QuotientGraph& graph, const Selection& sel) {
  if (graph.size() == 0) throw std::invalid_argument("density of an empty graph");
  if (sel.size() != graph.size()) throw std::invalid_argument("selection does not match graph");
  return Rational(sel.count(), graph.size());
}

DeficiencyReport deficiency(const Neighborhoods& nb, const Selection& sel) {
  require_match(nb, sel);
  if (nb.size() == 0) throw std::invalid_argument("deficiency of an empty graph");
  DeficiencyReport report;
  report.delta.reserve(static_cast<std::size_t>(nb.size()));
  long total = 0;
  for (int v = 0; v < nb.size(); ++v) {
    const int around = selected_neighbors(nb, sel, v);
    const int delta = sel.contains(v) ? around - nb.cap(v) : around - nb.degree(v);
    report.delta.push_back(delta);
    total += delta;
  }
  report.global = Rational(total, nb.size());
  return report;
}

DeficiencyReport deficiency(const QuotientGraph& graph, const Selection& sel) {
  return deficiency(Neighborhoods(graph), sel);
}

Rational deficiency_closed_form(const Neighborhoods& nb, const Selection& sel) {
  require_match(nb, sel);
  long total = 0;
  for (int v = 0; v < nb.size(); ++v) {
    const int d = nb.degree(v);
    if (sel.contains(v)) total += d + (d + 1) / 2;
    total -= d;
  }
  return Rational(total, nb.size());
}

}  // namespace halfdom
