#include "invseq/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace invseq {

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  auto end_row = [&] {
    if (any || !field.empty() || !row.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    row.clear();
    field.clear();
    any = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw Error(Errc::parse_error, "unterminated quote in CSV");
  end_row();
  return rows;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc())
      throw Error(Errc::parse_error, "bad integer list: " + std::string(text));
    i = static_cast<std::size_t>(p - text.data());
    out.push_back(v);
  }
  return out;
}

std::string write_bfile(const AvoidanceSequence& seq, int first_index) {
  std::ostringstream os;
  for (std::size_t i = 0; i < seq.counts.size(); ++i) os << first_index + static_cast<int>(i) << ' ' << seq.counts[i] << '\n';
  return os.str();
}

std::vector<std::pair<int, count_t>> parse_bfile(std::string_view text) {
  std::vector<std::pair<int, count_t>> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long n;
    unsigned long long v;
    if (!(ls >> n >> v)) throw Error(Errc::parse_error, "bad b-file line: " + line);
    out.emplace_back(static_cast<int>(n), static_cast<count_t>(v));
  }
  return out;
}

std::string write_sequence_csv(const AvoidanceSequence& seq) {
  std::ostringstream os;
  os << "n,count\n";
  for (std::size_t i = 0; i < seq.counts.size(); ++i) os << i + 1 << ',' << seq.counts[i] << '\n';
  return os.str();
}

std::string write_sequence_json(const std::vector<std::string>& patterns, const AvoidanceSequence& seq,
                                std::string_view provenance) {
  nlohmann::ordered_json j;
  j["pair"] = patterns;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < seq.counts.size(); ++i) counts[std::to_string(i + 1)] = seq.counts[i];
  j["counts"] = counts;
  j["provenance"] = std::string(provenance);
  return j.dump() + "\n";
}

std::string write_triangle_csv(const IndexedTriangle& t) {
  std::ostringstream os;
  os << "n,m,l,value\n";
  for (int n = 1; n <= t.nmax(); ++n)
    t.for_each_cell(n, [&](int m, int l, count_t v) { os << n << ',' << m << ',' << l << ',' << v << '\n'; });
  return os.str();
}

std::string write_triangle_csv(const Triangle& t) {
  std::ostringstream os;
  os << "n,k,value\n";
  for (int n = 1; n <= t.nmax(); ++n)
    for (int k = t.first_col(n); k <= t.last_col(n); ++k) os << n << ',' << k << ',' << t.at(n, k) << '\n';
  return os.str();
}

std::string write_series(const Fps& f) {
  std::string out;
  for (const auto& q : f.coefficients()) out += to_string(q) + '\n';
  return out;
}

Fps parse_series(std::string_view text) {
  std::vector<BigRational> c;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    c.push_back(parse_rational(line));
  }
  if (c.empty()) throw Error(Errc::parse_error, "empty series");
  const int order = static_cast<int>(c.size()) - 1;
  return Fps::from(std::move(c), order);
}

}  // namespace invseq
