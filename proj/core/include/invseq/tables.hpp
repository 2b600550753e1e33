#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/closed_forms.hpp"
#include "invseq/enumerate.hpp"

namespace invseq {

enum class TableId { one = 1, two = 2 };

struct TableRow {
  TableId table;
  PatternPair pair;
  std::string label;                 // "4082,A", or "34" for singleton classes
  std::optional<FormulaId> formula;  // oracle used alongside brute force
};

const std::vector<TableRow>& table_rows(TableId table);
// Numeric part of a class label: "4082,A" -> "4082".
std::string label_class(std::string_view label);
const TableRow* find_table_row(const PatternPair& pair);

struct ExpectedEntry {
  int n = 0;
  count_t value = 0;
  std::string provenance;
};

// pair key "001,010" -> entries sorted by n.
class ExpectedData {
 public:
  static ExpectedData embedded();
  static ExpectedData load(const std::filesystem::path& path);
  static ExpectedData parse(std::string_view csv);

  std::optional<ExpectedEntry> get(const PatternPair& pair, int n) const;
  std::vector<ExpectedEntry> entries(const PatternPair& pair) const;
  std::size_t size() const noexcept;

 private:
  std::map<std::string, std::vector<ExpectedEntry>> rows_;
};

struct CellReport {
  int n = 0;
  count_t computed = 0;
  std::optional<count_t> expected;
  std::optional<count_t> formula;
  bool match = true;
};

struct RowReport {
  TableRow row;
  std::vector<CellReport> cells;  // n = 1..nmax
  bool match = true;
  std::string note;
};

struct TableReport {
  TableId table;
  int nmax = 0;
  std::vector<RowReport> rows;

  std::size_t matched_rows() const;
  bool all_match() const { return matched_rows() == rows.size(); }
};

TableReport table_report(TableId table, int nmax, const ExpectedData& data, unsigned threads = 0);
std::string format_report(const TableReport& report);

// Every classification class must be exactly one label class of Tables 1-2.
// Returns an empty string on agreement, otherwise a description of the first disagreement.
std::string check_labels(const WilfClassification& classification);
// Label of the class containing the pair, e.g. "4082,A".
std::string class_label(const PatternPair& pair);

}  // namespace invseq
