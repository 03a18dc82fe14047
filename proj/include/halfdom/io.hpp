#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "halfdom/halfdom.hpp"
#include "halfdom/quotient_graph.hpp"
#include "halfdom/solver.hpp"
#include "halfdom/tables.hpp"

namespace halfdom {

/// Document that does not match its schema. what() starts with a JSON
/// pointer-style location such as "$.selected[4]".
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kFormatVersion = 1;

// Every document carries {"format": "halfdom-<type>", "version": 1}.

nlohmann::json graph_to_json(const QuotientGraph& graph);
QuotientGraph graph_from_json(const nlohmann::json& doc);

/// The selection document repeats the graph header (kind, m, n, quotient,
/// vertex count) and lists the selected ids in ascending order.
nlohmann::json selection_to_json(const QuotientGraph& graph, const Selection& sel);
/// Throws FormatError on a header that does not describe `graph` or on an
/// id outside the graph ("vertex id out of range").
Selection selection_from_json(const nlohmann::json& doc, const QuotientGraph& graph);

nlohmann::json bound_to_json(const BoundReport& report);
BoundReport bound_from_json(const nlohmann::json& doc);

nlohmann::json table_to_json(const TableReport& report);
TableReport table_from_json(const nlohmann::json& doc);

/// Parse errors are reported as FormatError with the byte offset.
nlohmann::json parse_document(std::string_view text);
std::string dump_document(const nlohmann::json& doc);

nlohmann::json read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace halfdom
