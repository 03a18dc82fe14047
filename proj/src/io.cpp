#include "halfdom/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace halfdom {

using nlohmann::json;

namespace {

// A location-aware view over one JSON node.
class Node {
 public:
  Node(const json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  [[nodiscard]] const json& raw() const { return *value_; }
  [[nodiscard]] const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const { throw FormatError(path_ + ": " + message); }

  [[nodiscard]] Node field(const char* key) const {
    if (!value_->is_object()) fail("expected an object");
    const auto it = value_->find(key);
    if (it == value_->end()) fail(std::string("missing field '") + key + "'");
    return Node(*it, path_ + "." + key);
  }
  [[nodiscard]] bool has(const char* key) const { return value_->is_object() && value_->contains(key); }

  [[nodiscard]] std::size_t size() const {
    if (!value_->is_array()) fail("expected an array");
    return value_->size();
  }
  [[nodiscard]] Node at(std::size_t i) const {
    return Node((*value_)[i], path_ + "[" + std::to_string(i) + "]");
  }

  [[nodiscard]] std::int64_t integer() const {
    if (!value_->is_number_integer()) fail("expected an integer");
    return value_->get<std::int64_t>();
  }
  [[nodiscard]] int int32() const {
    const std::int64_t v = integer();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail("integer out of range");
    return static_cast<int>(v);
  }
  [[nodiscard]] bool boolean() const {
    if (!value_->is_boolean()) fail("expected true or false");
    return value_->get<bool>();
  }
  [[nodiscard]] std::string text() const {
    if (!value_->is_string()) fail("expected a string");
    return value_->get<std::string>();
  }
  [[nodiscard]] Rational fraction() const {
    const std::string s = text();
    try {
      return Rational::parse(s);
    } catch (const std::exception&) {
      fail("malformed fraction '" + s + "'");
    }
  }

  template <class F>
  auto parsed(F&& parse) const {
    const std::string s = text();
    try {
      return parse(s);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

 private:
  const json* value_;
  std::string path_;
};

void expect_header(const Node& root, std::string_view format) {
  const std::string got = root.field("format").text();
  if (got != format) root.field("format").fail("expected '" + std::string(format) + "', found '" + got + "'");
  const std::int64_t version = root.field("version").integer();
  if (version != kFormatVersion) root.field("version").fail("unsupported version " + std::to_string(version));
}

json header(std::string_view format) {
  json doc = json::object();
  doc["format"] = format;
  doc["version"] = kFormatVersion;
  return doc;
}

json graph_header(const QuotientGraph& graph) {
  return json{{"kind", name(graph.kind())},
              {"m", graph.m()},
              {"n", graph.n()},
              {"quotient", to_string(graph.quotient())},
              {"vertices", graph.size()}};
}

json opt_to_json(const OptResult& r) {
  return json{{"cardinality", r.best_cardinality},
              {"objective", r.objective},
              {"objective_upper_bound", r.objective_upper_bound},
              {"status", to_string(r.status)},
              {"density", r.density.str()},
              {"target_reached", r.target_reached},
              {"lexicographic", r.lexicographic},
              {"method", to_string(r.method_used)},
              {"nodes", r.nodes},
              {"vertices", r.witness.size()},
              {"witness", r.witness.ids()}};
}

OptResult opt_from_json(const Node& node) {
  OptResult r;
  r.best_cardinality = node.field("cardinality").int32();
  r.objective = node.field("objective").integer();
  r.objective_upper_bound = node.field("objective_upper_bound").integer();
  r.status = node.field("status").parsed(parse_status);
  r.density = node.field("density").fraction();
  r.target_reached = node.field("target_reached").boolean();
  r.lexicographic = node.field("lexicographic").boolean();
  r.method_used = node.field("method").parsed(parse_method);
  r.nodes = static_cast<long>(node.field("nodes").integer());
  const int vertices = node.field("vertices").int32();
  if (vertices < 0) node.field("vertices").fail("must be non-negative");
  r.witness = Selection(vertices);
  const Node ids = node.field("witness");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const int v = ids.at(i).int32();
    if (v < 0 || v >= vertices) ids.at(i).fail("vertex id out of range");
    r.witness.set(v);
  }
  return r;
}

}  // namespace

json graph_to_json(const QuotientGraph& graph) {
  json doc = header("halfdom-graph");
  doc["kind"] = name(graph.kind());
  doc["m"] = graph.m();
  doc["n"] = graph.n();
  doc["quotient"] = to_string(graph.quotient());
  json vertices = json::array();
  for (const auto& rec : graph.vertices()) vertices.push_back({rec.id, rec.i, rec.j, rec.k, rec.sides});
  doc["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& [u, w] : graph.edges()) edges.push_back({u, w});
  doc["edges"] = std::move(edges);
  doc["half_loops"] = graph.half_loops();
  return doc;
}

QuotientGraph graph_from_json(const json& doc) {
  const Node root(doc, "$");
  expect_header(root, "halfdom-graph");
  const TessKind kind = root.field("kind").parsed(parse_kind);
  const int m = root.field("m").int32();
  const int n = root.field("n").int32();
  if (m < 1) root.field("m").fail("must be positive");
  if (n < 1) root.field("n").fail("must be positive");
  const Quotient quotient = root.field("quotient").parsed(parse_quotient);

  const Node vnode = root.field("vertices");
  std::vector<VertexRecord> vertices;
  vertices.reserve(vnode.size());
  for (std::size_t t = 0; t < vnode.size(); ++t) {
    const Node rec = vnode.at(t);
    if (rec.size() != 5) rec.fail("expected [id, i, j, k, sides]");
    VertexRecord r{rec.at(0).int32(), rec.at(1).int32(), rec.at(2).int32(), rec.at(3).int32(), rec.at(4).int32()};
    if (r.id != static_cast<int>(t)) rec.at(0).fail("ids must be 0, 1, 2, ... in order");
    vertices.push_back(r);
  }
  const int count = static_cast<int>(vertices.size());
  auto vertex_id = [count](const Node& node) {
    const int v = node.int32();
    if (v < 0 || v >= count) node.fail("vertex id out of range (" + std::to_string(v) + " not in 0.." +
                                       std::to_string(count - 1) + ")");
    return v;
  };
  const Node enode = root.field("edges");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(enode.size());
  for (std::size_t t = 0; t < enode.size(); ++t) {
    const Node e = enode.at(t);
    if (e.size() != 2) e.fail("expected [u, w]");
    edges.emplace_back(vertex_id(e.at(0)), vertex_id(e.at(1)));
  }
  std::vector<int> half_loops;
  if (root.has("half_loops")) {
    const Node hnode = root.field("half_loops");
    for (std::size_t t = 0; t < hnode.size(); ++t) half_loops.push_back(vertex_id(hnode.at(t)));
  }
  return QuotientGraph::from_parts(kind, m, n, quotient, std::move(vertices), edges, half_loops);
}

json selection_to_json(const QuotientGraph& graph, const Selection& sel) {
  if (sel.size() != graph.size()) throw std::invalid_argument("selection does not match graph");
  json doc = header("halfdom-selection");
  doc["graph"] = graph_header(graph);
  doc["selected"] = sel.ids();
  doc["cardinality"] = sel.count();
  doc["density"] = density(graph, sel).str();
  return doc;
}

Selection selection_from_json(const json& doc, const QuotientGraph& graph) {
  const Node root(doc, "$");
  expect_header(root, "halfdom-selection");
  const Node g = root.field("graph");
  const std::string kind = std::string(name(g.field("kind").parsed(parse_kind)));
  if (kind != name(graph.kind())) {
    g.field("kind").fail("selection is for " + kind + ", graph is " + std::string(name(graph.kind())));
  }
  auto same = [&](const char* key, int expected) {
    const int got = g.field(key).int32();
    if (got != expected) {
      g.field(key).fail("selection has " + std::to_string(got) + ", graph has " + std::to_string(expected));
    }
  };
  same("m", graph.m());
  same("n", graph.n());
  same("vertices", graph.size());
  const Quotient q = g.field("quotient").parsed(parse_quotient);
  if (q != graph.quotient()) {
    g.field("quotient").fail("selection is for " + std::string(to_string(q)) + ", graph is " +
                             std::string(to_string(graph.quotient())));
  }

  Selection sel(graph.size());
  const Node ids = root.field("selected");
  for (std::size_t t = 0; t < ids.size(); ++t) {
    const Node item = ids.at(t);
    const int v = item.int32();
    if (v < 0 || v >= graph.size()) {
      item.fail("vertex id out of range (" + std::to_string(v) + " not in 0.." + std::to_string(graph.size() - 1) +
                ")");
    }
    if (sel.contains(v)) item.fail("duplicate vertex id " + std::to_string(v));
    sel.set(v);
  }
  if (root.has("cardinality") && root.field("cardinality").int32() != sel.count()) {
    root.field("cardinality").fail("does not match the number of selected ids");
  }
  if (root.has("density") && root.field("density").fraction() != density(graph, sel)) {
    root.field("density").fail("does not match the selected ids");
  }
  return sel;
}

json bound_to_json(const BoundReport& report) {
  json doc = header("halfdom-bound");
  doc["value"] = report.value.str();
  doc["provenance"] = to_string(report.provenance);
  doc["status"] = to_string(report.status);
  json cert = json::array();
  for (std::size_t i = 0; i < report.certificate.size(); ++i) {
    const std::string label = i < report.certificate_labels.size() ? report.certificate_labels[i] : "";
    cert.push_back({{"label", label}, {"value", report.certificate[i].str()}});
  }
  doc["certificate"] = std::move(cert);
  doc["granularity"] = report.granularity;
  doc["note"] = report.note;
  doc["inner"] = report.inner ? opt_to_json(*report.inner) : json(nullptr);
  return doc;
}

BoundReport bound_from_json(const json& doc) {
  const Node root(doc, "$");
  expect_header(root, "halfdom-bound");
  BoundReport report;
  report.value = root.field("value").fraction();
  report.provenance = root.field("provenance").parsed(parse_provenance);
  report.status = root.field("status").parsed(parse_status);
  const Node cert = root.field("certificate");
  bool any_label = false;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    report.certificate.push_back(cert.at(i).field("value").fraction());
    report.certificate_labels.push_back(cert.at(i).field("label").text());
    any_label = any_label || !report.certificate_labels.back().empty();
  }
  if (!any_label) report.certificate_labels.clear();
  report.granularity = root.field("granularity").text();
  report.note = root.field("note").text();
  const Node inner = root.field("inner");
  if (!inner.raw().is_null()) report.inner = opt_from_json(inner);
  return report;
}

json table_to_json(const TableReport& report) {
  json doc = header("halfdom-table");
  doc["id"] = to_string(report.id);
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {{"label", row.label},
              {"m", row.m},
              {"n", row.n},
              {"vertices", row.vertices},
              {"cardinality", row.cardinality},
              {"value", row.value.str()},
              {"status", to_string(row.status)},
              {"provenance", row.provenance},
              {"verdict", to_string(row.verdict)},
              {"witness", row.witness}};
    r["expected"] = row.expected ? json{{"value", row.expected->value.str()}, {"at_least", row.expected->at_least}}
                                 : json(nullptr);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

TableReport table_from_json(const json& doc) {
  const Node root(doc, "$");
  expect_header(root, "halfdom-table");
  TableReport report;
  report.id = root.field("id").parsed(parse_table_id);
  const Node rows = root.field("rows");
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Node r = rows.at(t);
    TableRow row;
    row.label = r.field("label").text();
    row.m = r.field("m").int32();
    row.n = r.field("n").int32();
    row.vertices = r.field("vertices").int32();
    row.cardinality = r.field("cardinality").int32();
    row.value = r.field("value").fraction();
    row.status = r.field("status").parsed(parse_status);
    row.provenance = r.field("provenance").text();
    row.verdict = r.field("verdict").parsed(parse_verdict);
    const Node w = r.field("witness");
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int v = w.at(i).int32();
      if (v < 0 || v >= row.vertices) w.at(i).fail("vertex id out of range");
      row.witness.push_back(v);
    }
    const Node e = r.field("expected");
    if (!e.raw().is_null()) row.expected = Reference{e.field("value").fraction(), e.field("at_least").boolean()};
    report.rows.push_back(std::move(row));
  }
  return report;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("$: not valid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump_document(const json& doc) { return doc.dump(2) + "\n"; }

json read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + " " + e.what());
  }
}

void write_document(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_document(doc);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace halfdom
