#include "invseq/tables.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "invseq/io.hpp"

namespace invseq {

namespace detail {
extern const std::string_view kEmbeddedExpectedCsv;
}

namespace {

using F = FormulaId;

struct RowSpec {
  const char* pair;
  const char* label;
  std::optional<FormulaId> formula;
};

std::vector<TableRow> build(TableId table, std::initializer_list<RowSpec> specs) {
  std::vector<TableRow> rows;
  for (const auto& s : specs) rows.push_back(TableRow{table, PatternPair::parse(s.pair), s.label, s.formula});
  return rows;
}

}  // namespace

const std::vector<TableRow>& table_rows(TableId table) {
  static const std::vector<TableRow> one = build(TableId::one, {
      {"001,010", "8,A", F::N},
      {"001,011", "8,B", F::N},
      {"001,012", "8,C", F::N},
      {"001,110", "29,A", F::LAZY},
      {"001,021", "29,B", F::LAZY},
      {"001,120", "29,C", F::LAZY},
      {"000,001", "34", F::FIB1},
      {"001,100", "54", F::FIB2M1},
      {"001,210", "64", F::CAKE},
      {"000,011", "128,A", F::POW2},
      {"001,101", "128,B", F::POW2},
      {"001,102", "128,C", F::POW2},
      {"001,201", "128,D", F::POW2},
      {"010,012", "128,E", F::POW2},
      {"011,012", "128,F", F::POW2},
      {"110,012", "248,A", F::POW2MN},
      {"012,021", "248,B", F::POW2MN},
      {"012,201", "411,A", F::VEX},
      {"012,210", "411,B", F::VEX},
      {"011,102", "610,A", F::FIBBIS},
      {"012,102", "610,B", F::FIBBIS},
      {"012,120", "610,C", F::FIBBIS},
      {"010,011", "733", F::SUMPOW},
      {"011,021", "1430,A", F::CATALAN},
      {"010,021", "1430,B", F::CATALAN},
      {"011,201", "3091,A", std::nullopt},
      {"011,210", "3091,B", std::nullopt},
      {"021,120", "4082,A", F::A279561},
      {"102,120", "4082,B", F::A279561},
      {"110,102", "4082,C", F::A279561},
      {"010,100", "4140,D", F::BELL},
      {"011,101", "4140,E", F::BELL},
      {"011,110", "4140,F", F::BELL},
      {"101,021", "5798,B", F::A106228},
      {"021,201", "8558,A", F::SCHRODER},
      {"021,210", "8558,B", F::SCHRODER},
      {"101,110", "11624", F::A074664},
  });
  static const std::vector<TableRow> two = build(TableId::two, {
      {"000,012", "0", std::nullopt},
      {"100,012", "207", std::nullopt},
      {"101,012", "351", std::nullopt},
      {"000,021", "911", std::nullopt},
      {"000,102", "1181", std::nullopt},
      {"000,010", "1376", std::nullopt},
      {"011,120", "1452", std::nullopt},
      {"100,011", "2048", std::nullopt},
      {"021,102", "2211", std::nullopt},
      {"010,102", "2763", std::nullopt},
      {"000,120", "3126", std::nullopt},
      {"010,120", "3801", std::nullopt},
      {"010,110", "3836", std::nullopt},
      {"010,101", "4140,A", F::BELL},
      {"000,101", "4140,B", F::BELL},
      {"000,110", "4140,C", F::BELL},
      {"100,021", "4433,A", std::nullopt},
      {"110,021", "4433,B", std::nullopt},
      {"010,201", "4650,A", std::nullopt},
      {"010,210", "4650,B", std::nullopt},
      {"100,102", "5487", std::nullopt},
      {"102,210", "5681", std::nullopt},
      {"101,102", "5798,A", F::A106228},
      {"102,201", "6154", std::nullopt},
      {"000,201", "6270,A", std::nullopt},
      {"000,210", "6270,B", std::nullopt},
      {"000,100", "6850", std::nullopt},
      {"101,120", "9145", std::nullopt},
      {"100,120", "10646", std::nullopt},
      {"110,120", "10950", std::nullopt},
      {"100,110", "12227", std::nullopt},
      {"100,101", "12628", std::nullopt},
      {"120,201", "14386", std::nullopt},
      {"120,210", "14601", std::nullopt},
      {"110,201", "15464", std::nullopt},
      {"101,210", "15816", std::nullopt},
      {"101,201", "17734,A", std::nullopt},
      {"100,210", "17734,B", std::nullopt},
      {"100,201", "17734,C", std::nullopt},
      {"110,210", "17734,D", std::nullopt},
      {"201,210", "23072", std::nullopt},
  });
  return table == TableId::one ? one : two;
}

std::string label_class(std::string_view label) { return std::string(label.substr(0, label.find(','))); }

const TableRow* find_table_row(const PatternPair& pair) {
  for (TableId t : {TableId::one, TableId::two})
    for (const auto& r : table_rows(t))
      if (r.pair.same_unordered(pair)) return &r;
  return nullptr;
}

std::string class_label(const PatternPair& pair) {
  const TableRow* r = find_table_row(pair);
  return r ? r->label : std::string("?");
}

// ExpectedData

ExpectedData ExpectedData::embedded() { return parse(detail::kEmbeddedExpectedCsv); }

ExpectedData ExpectedData::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

ExpectedData ExpectedData::parse(std::string_view csv) {
  ExpectedData d;
  auto rows = parse_csv(csv);
  bool header = true;
  for (const auto& r : rows) {
    if (header) {
      header = false;
      if (!r.empty() && r[0] == "pair") continue;
    }
    if (r.size() < 3) throw Error(Errc::parse_error, "expected-data row needs pair,n,expected_count");
    ExpectedEntry e;
    auto num = [&](const std::string& s, auto& out) {
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc() || p != s.data() + s.size()) throw Error(Errc::parse_error, "bad number in expected data: " + s);
    };
    num(r[1], e.n);
    num(r[2], e.value);
    e.provenance = r.size() > 3 ? r[3] : "";
    d.rows_[PatternPair::parse(r[0]).key()].push_back(std::move(e));
  }
  for (auto& [k, v] : d.rows_) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  return d;
}

std::vector<ExpectedEntry> ExpectedData::entries(const PatternPair& pair) const {
  auto it = rows_.find(pair.key());
  if (it == rows_.end()) it = rows_.find(PatternPair{pair.second, pair.first}.key());
  return it == rows_.end() ? std::vector<ExpectedEntry>{} : it->second;
}

std::optional<ExpectedEntry> ExpectedData::get(const PatternPair& pair, int n) const {
  for (auto& e : entries(pair))
    if (e.n == n) return e;
  return std::nullopt;
}

std::size_t ExpectedData::size() const noexcept {
  std::size_t s = 0;
  for (const auto& [k, v] : rows_) s += v.size();
  return s;
}

// Reports

std::size_t TableReport::matched_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RowReport& r) { return r.match; }));
}

TableReport table_report(TableId table, int nmax, const ExpectedData& data, unsigned threads) {
  TableReport rep{table, nmax, {}};
  for (const auto& row : table_rows(table)) {
    RowReport rr{row, {}, true, {}};
    auto seq = avoidance_sequence(row.pair.pattern_set(), nmax, threads);
    for (int n = 1; n <= nmax; ++n) {
      CellReport c;
      c.n = n;
      c.computed = seq.at(n);
      if (auto e = data.get(row.pair, n)) {
        c.expected = e->value;
        if (e->provenance == "oracle-corrected") rr.note = "paper-text discrepancy, oracle value used";
      }
      if (row.formula) c.formula = oracle_value(*row.formula, n);
      c.match = (!c.expected || *c.expected == c.computed) && (!c.formula || *c.formula == c.computed);
      rr.match = rr.match && c.match;
      rr.cells.push_back(c);
    }
    // Stored values beyond nmax are not checked; stored values must exist for at least one checked n.
    if (std::none_of(rr.cells.begin(), rr.cells.end(), [](const CellReport& c) { return c.expected.has_value(); }) &&
        rr.note.empty())
      rr.note = "no stored value within n <= " + std::to_string(nmax);
    rep.rows.push_back(std::move(rr));
  }
  return rep;
}

std::string format_report(const TableReport& report) {
  std::ostringstream os;
  os << "table " << static_cast<int>(report.table) << ", n = 1.." << report.nmax << '\n';
  for (const auto& r : report.rows) {
    os << (r.match ? "ok   " : "FAIL ") << r.row.pair.to_string() << ' ' << r.row.label << " :";
    for (const auto& c : r.cells) {
      os << ' ' << c.computed;
      if (c.expected && *c.expected != c.computed) os << "[stored " << *c.expected << ']';
      if (c.formula && *c.formula != c.computed) os << "[formula " << *c.formula << ']';
    }
    if (!r.note.empty()) os << "  # " << r.note;
    os << '\n';
  }
  os << report.matched_rows() << '/' << report.rows.size() << " rows match\n";
  return os.str();
}

std::string check_labels(const WilfClassification& classification) {
  std::set<std::string> seen;
  for (const auto& cls : classification.classes) {
    std::set<std::string> labels;
    for (const auto& p : cls.members) {
      const TableRow* r = find_table_row(p);
      if (!r) return "pair " + p.to_string() + " is in neither table";
      labels.insert(label_class(r->label));
    }
    if (labels.size() != 1) {
      std::string s = "class of " + cls.members.front().to_string() + " mixes labels";
      for (const auto& l : labels) s += ' ' + l;
      return s;
    }
    if (!seen.insert(*labels.begin()).second) return "label " + *labels.begin() + " is split across classes";
  }
  return {};
}

}  // namespace invseq
