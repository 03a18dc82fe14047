#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfdom/rational.hpp"
#include "halfdom/solver.hpp"

namespace halfdom {

enum class TableId { t36_torus, t36_klein, t3344_torus, t3464_torus, bounds_all };

std::string_view to_string(TableId id);
TableId parse_table_id(std::string_view text);
std::vector<TableId> table_ids();

struct TableSpec {
  TableId id = TableId::t36_torus;
  /// Largest n (square tables run n x n); unset picks the table default.
  std::optional<int> max_n;
  /// Per-cell wall-clock budget.
  std::optional<std::chrono::duration<double>> time_limit;
  int threads = 1;
  bool deterministic = false;
};

enum class Verdict { matches, differs, no_reference, inconclusive };
std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// A published value; at_least marks rows that only claim a lower bound.
struct Reference {
  Rational value;
  bool at_least = false;
};

struct TableRow {
  std::string label;  // "n=4", "(2,2)", or a kind name
  int m = 0;
  int n = 0;
  int vertices = 0;
  int cardinality = 0;
  Rational value;
  Status status = Status::optimal;
  std::string provenance;
  std::optional<Reference> expected;
  Verdict verdict = Verdict::no_reference;
  std::vector<int> witness;
};

struct TableReport {
  TableId id = TableId::t36_torus;
  std::vector<TableRow> rows;

  [[nodiscard]] bool any_differs() const;
};

/// Published value for a table cell, if there is one.
std::optional<Reference> reference_value(TableId id, int m, int n);
std::optional<Reference> reference_bound(TessKind kind);

Verdict judge(const Rational& value, Status status, const std::optional<Reference>& expected);

TableReport reproduce_table(const TableSpec& spec);

/// Fixed-width text rendering; budget-limited cells show as ">= p/q".
std::string format_table(const TableReport& report);

}  // namespace halfdom
