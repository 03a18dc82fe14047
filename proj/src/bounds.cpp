#include "halfdom/bounds.hpp"

#include <map>
#include <stdexcept>

#include "halfdom/quotient_graph.hpp"

namespace halfdom {

namespace {

std::string polygon_name(int sides) {
  switch (sides) {
    case 3:
      return "triangle";
    case 4:
      return "square";
    case 6:
      return "hexagon";
    case 8:
      return "octagon";
    case 12:
      return "dodecagon";
    default:
      return std::to_string(sides) + "-gon";
  }
}

}  // namespace

std::string_view to_string(Granularity g) { return g == Granularity::polygon ? "polygon" : "position"; }

Granularity parse_granularity(std::string_view text) {
  if (text == "polygon") return Granularity::polygon;
  if (text == "position") return Granularity::position;
  throw std::invalid_argument("unknown granularity '" + std::string(text) + "'");
}

bool ClassIncidence::all_uniform() const {
  for (const auto& c : classes) {
    if (!c.uniform) return false;
  }
  return true;
}

ClassIncidence class_incidence(TessKind kind, Granularity granularity) {
  constexpr int kSide = 3;
  const QuotientGraph torus = build_torus(kind, kSide, kSide);
  const ClusterSpec& spec = cluster_spec(kind);

  ClassIncidence out;
  out.kind = kind;
  out.granularity = granularity;
  out.cluster_size = spec.size();

  std::vector<int> class_of_tile(static_cast<std::size_t>(spec.size()) + 1, -1);
  if (granularity == Granularity::polygon) {
    std::map<int, int> by_sides;
    for (const auto& t : spec.tiles) by_sides[t.sides] = 0;
    int next = 0;
    for (auto& [sides, idx] : by_sides) {
      idx = next++;
      out.classes.push_back({polygon_name(sides), 0, sides, true});
    }
    for (const auto& t : spec.tiles) {
      const int c = by_sides[t.sides];
      class_of_tile[static_cast<std::size_t>(t.index)] = c;
      ++out.classes[static_cast<std::size_t>(c)].count;
    }
  } else {
    for (const auto& t : spec.tiles) {
      class_of_tile[static_cast<std::size_t>(t.index)] = static_cast<int>(out.classes.size());
      out.classes.push_back({"k=" + std::to_string(t.index) + " " + polygon_name(t.sides), 1, t.sides, true});
    }
  }

  const auto nc = out.classes.size();
  std::vector<std::vector<long>> totals(nc, std::vector<long>(nc, 0));
  std::vector<std::vector<int>> first(nc);
  std::vector<long> members(nc, 0);
  for (int v = 0; v < torus.size(); ++v) {
    const auto a = static_cast<std::size_t>(class_of_tile[static_cast<std::size_t>(torus.vertex(v).k)]);
    std::vector<int> profile(nc, 0);
    for (int w : torus.neighbors(v)) {
      ++profile[static_cast<std::size_t>(class_of_tile[static_cast<std::size_t>(torus.vertex(w).k)])];
    }
    if (first[a].empty()) {
      first[a] = profile;
    } else if (first[a] != profile) {
      out.classes[a].uniform = false;
    }
    ++members[a];
    for (std::size_t b = 0; b < nc; ++b) totals[a][b] += profile[b];
  }
  out.incidence.assign(nc, std::vector<Rational>(nc));
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nc; ++b) out.incidence[a][b] = Rational(totals[a][b], members[a]);
  }
  return out;
}

LinearSystem class_system(const ClassIncidence& classes) {
  const auto nc = classes.classes.size();
  const Rational cluster(classes.cluster_size);
  LinearSystem sys;
  sys.variables = static_cast<int>(nc);
  for (std::size_t a = 0; a < nc; ++a) {
    const auto& cls = classes.classes[a];
    const Rational share = Rational(cls.count) / cluster;
    LinearRow row;
    for (std::size_t b = 0; b < nc; ++b) {
      Rational coeff = classes.incidence[b][a];
      if (b == a) coeff += Rational(cls.degree - cls.degree / 2);
      if (!coeff.is_zero()) row.terms.emplace_back(static_cast<int>(b), coeff);
    }
    row.rhs = Rational(cls.degree) * share;
    row.label = cls.label;
    sys.rows.push_back(std::move(row));
  }
  for (std::size_t a = 0; a < nc; ++a) {
    const auto& cls = classes.classes[a];
    LinearRow cap;
    cap.terms.emplace_back(static_cast<int>(a), Rational(1));
    cap.rhs = Rational(cls.count) / cluster;
    cap.label = cls.label + " capacity";
    sys.rows.push_back(std::move(cap));
  }
  return sys;
}

BoundReport aggregated_lp_bound(TessKind kind, Granularity granularity) {
  ClassIncidence classes = class_incidence(kind, granularity);
  std::string note;
  if (!classes.all_uniform()) {
    note = "polygon classes are not uniform; used position classes";
    classes = class_incidence(kind, Granularity::position);
  }
  const LinearSystem sys = class_system(classes);
  const LpSolution lp = lp_optimum(sys, std::vector<Rational>(classes.classes.size(), Rational(1)));

  BoundReport report;
  report.value = lp.value;
  report.provenance = Provenance::aggregated_lp;
  report.status = Status::optimal;
  report.certificate = lp.primal;
  for (const auto& c : classes.classes) report.certificate_labels.push_back(c.label);
  report.granularity = std::string(to_string(classes.granularity));
  report.note = note;
  return report;
}

}  // namespace halfdom
