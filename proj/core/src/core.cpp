#include "invseq/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace invseq {

namespace {

int cmp(int a, int b) { return (a > b) - (a < b); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// chosen[0..depth) are indices into word matched to p[0..depth).
bool extend(std::span<const int> word, const std::vector<int>& p, std::vector<std::size_t>& chosen,
            std::size_t from, std::size_t limit) {
  std::size_t depth = chosen.size();
  if (depth == p.size()) return true;
  std::size_t remaining = p.size() - depth;
  for (std::size_t i = from; i + remaining <= limit; ++i) {
    bool ok = true;
    for (std::size_t a = 0; a < depth && ok; ++a)
      ok = cmp(word[chosen[a]], word[i]) == cmp(p[a], p[depth]);
    if (!ok) continue;
    chosen.push_back(i);
    if (extend(word, p, chosen, i + 1, limit)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

static void check_bounds(std::span<const int> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0 || word[i] > static_cast<int>(i))
      throw Error(Errc::out_of_range,
                  "entry " + std::to_string(word[i]) + " at position " + std::to_string(i + 1) +
                      " is outside [0," + std::to_string(i) + "]",
                  i + 1);
  }
}

InvSeq::InvSeq(std::vector<int> entries) : entries_(std::move(entries)) { check_bounds(entries_); }

InvSeq validate_invseq(std::span<const int> word) { return InvSeq(std::vector<int>(word.begin(), word.end())); }

bool is_invseq(std::span<const int> word) noexcept {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] < 0 || word[i] > static_cast<int>(i)) return false;
  return true;
}

Pattern::Pattern(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(Errc::non_canonical_pattern, "empty pattern");
  std::set<int> distinct(letters_.begin(), letters_.end());
  int expect = 0;
  for (int v : distinct) {
    if (v != expect++)
      throw Error(Errc::non_canonical_pattern,
                  "pattern " + format_word(letters_) + " does not use exactly the letters 0..d-1");
  }
}

Pattern Pattern::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> letters;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::parse_error, "pattern '" + std::string(text) + "' must be a word of digits");
    letters.push_back(c - '0');
  }
  return Pattern(std::move(letters));
}

std::string Pattern::to_string() const {
  std::string s;
  for (int v : letters_) s += static_cast<char>('0' + v);
  return s;
}

std::vector<Pattern> parse_pattern_list(std::string_view csv) {
  std::vector<Pattern> out;
  if (trim(csv).empty()) return out;
  for (auto part : split(csv, ',')) out.push_back(Pattern::parse(part));
  return out;
}

Relation parse_relation(std::string_view symbol) {
  symbol = trim(symbol);
  if (symbol == "<") return Relation::lt;
  if (symbol == ">") return Relation::gt;
  if (symbol == "<=" || symbol == "≤") return Relation::le;
  if (symbol == ">=" || symbol == "≥") return Relation::ge;
  if (symbol == "=" || symbol == "==") return Relation::eq;
  if (symbol == "!=" || symbol == "≠") return Relation::ne;
  if (symbol == "-" || symbol == "−") return Relation::any;
  throw Error(Errc::invalid_relation, "unknown relation symbol '" + std::string(symbol) + "'");
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::lt: return "<";
    case Relation::gt: return ">";
    case Relation::le: return "≤";
    case Relation::ge: return "≥";
    case Relation::eq: return "=";
    case Relation::ne: return "≠";
    case Relation::any: return "-";
  }
  return "?";
}

RelTriple RelTriple::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  auto parts = split(text, ',');
  if (parts.size() != 3)
    throw Error(Errc::invalid_relation, "a relation triple needs three comma-separated relations");
  return RelTriple{parse_relation(parts[0]), parse_relation(parts[1]), parse_relation(parts[2])};
}

std::string RelTriple::to_string() const {
  std::string s = "(";
  s += invseq::to_string(rho1);
  s += ",";
  s += invseq::to_string(rho2);
  s += ",";
  s += invseq::to_string(rho3);
  return s + ")";
}

RelTriple profile_triple(const Pattern& p) {
  if (p.size() != 3) throw Error(Errc::parse_error, "profile_triple needs a length-3 pattern");
  auto rel = [](int a, int b) {
    return a < b ? Relation::lt : (a > b ? Relation::gt : Relation::eq);
  };
  return RelTriple{rel(p[0], p[1]), rel(p[1], p[2]), rel(p[0], p[2])};
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    int v = values_[i];
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[v])
      throw Error(Errc::invalid_permutation, format_word(values_) + " is not a permutation of 1..n", i + 1);
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    for (auto part : split(text, ',')) {
      if (part.empty()) throw Error(Errc::parse_error, "empty permutation entry");
      values.push_back(std::stoi(std::string(part)));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(Errc::parse_error, "permutation '" + std::string(text) + "' must be digits");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

InvSeq lehmer_code(const Permutation& pi) {
  std::vector<int> e(pi.size(), 0);
  for (std::size_t i = 0; i < pi.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pi[j] > pi[i]) ++e[i];
  return InvSeq(std::move(e));
}

bool contains_pattern(std::span<const int> word, const Pattern& p) {
  std::vector<std::size_t> chosen;
  chosen.reserve(p.size());
  return extend(word, p.letters(), chosen, 0, word.size());
}

bool contains_pattern_ending_at_last(std::span<const int> word, const Pattern& p) {
  const std::size_t k = p.size();
  if (word.size() < k) return false;
  const std::size_t last = word.size() - 1;
  // Match p[0..k-1) inside word[0..last) and check each chosen letter against the last one.
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  const auto& letters = p.letters();
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    std::size_t depth = chosen.size();
    if (depth == k - 1) return true;
    std::size_t remaining = k - 1 - depth;
    for (std::size_t i = from; i + remaining <= last; ++i) {
      if (cmp(word[i], word[last]) != cmp(letters[depth], letters[k - 1])) continue;
      bool ok = true;
      for (std::size_t a = 0; a < depth && ok; ++a) ok = cmp(word[chosen[a]], word[i]) == cmp(letters[a], letters[depth]);
      if (!ok) continue;
      chosen.push_back(i);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool avoids_all(std::span<const int> word, std::span<const Pattern> ps) {
  for (const auto& p : ps)
    if (contains_pattern(word, p)) return false;
  return true;
}

bool avoids_triple(std::span<const int> e, const RelTriple& t) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!holds(t.rho1, e[i], e[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (holds(t.rho2, e[j], e[k]) && holds(t.rho3, e[i], e[k])) return false;
    }
  return true;
}

bool contains_triple_ending_at_last(std::span<const int> e, const RelTriple& t) {
  if (e.size() < 3) return false;
  const std::size_t k = e.size() - 1;
  const int x = e[k];
  for (std::size_t j = 1; j < k; ++j) {
    if (!holds(t.rho2, e[j], x)) continue;
    for (std::size_t i = 0; i < j; ++i)
      if (holds(t.rho1, e[i], e[j]) && holds(t.rho3, e[i], x)) return true;
  }
  return false;
}

StatVector stats(const InvSeq& e) {
  StatVector s;
  const int n = static_cast<int>(e.size());
  std::set<int> positive;
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n && e[i] < e[i + 1]) ++s.asc;
    if (e[i] == 0) ++s.zero;
    else positive.insert(e[i]);
    if (e[i] == i) ++s.satu;
  }
  // Right-to-left scan: e_i is a right minimum iff it is below every later entry.
  int suffix_min = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (i == n - 1 || e[i] < suffix_min) ++s.rmin;
    suffix_min = (i == n - 1) ? e[i] : std::min(suffix_min, e[i]);
  }
  s.dist = static_cast<int>(positive.size());
  s.rep = n - s.dist;
  s.last = n > 0 ? e[n - 1] : 0;
  return s;
}

Statistic parse_statistic(std::string_view name) {
  name = trim(name);
  if (name == "asc") return Statistic::asc;
  if (name == "dist") return Statistic::dist;
  if (name == "rmin") return Statistic::rmin;
  if (name == "zero") return Statistic::zero;
  if (name == "satu") return Statistic::satu;
  if (name == "rep") return Statistic::rep;
  if (name == "last") return Statistic::last;
  throw Error(Errc::unknown_statistic, "unknown statistic '" + std::string(name) + "'");
}

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::asc: return "asc";
    case Statistic::dist: return "dist";
    case Statistic::rmin: return "rmin";
    case Statistic::zero: return "zero";
    case Statistic::satu: return "satu";
    case Statistic::rep: return "rep";
    case Statistic::last: return "last";
  }
  return "?";
}

int statistic_value(const StatVector& v, Statistic s) {
  switch (s) {
    case Statistic::asc: return v.asc;
    case Statistic::dist: return v.dist;
    case Statistic::rmin: return v.rmin;
    case Statistic::zero: return v.zero;
    case Statistic::satu: return v.satu;
    case Statistic::rep: return v.rep;
    case Statistic::last: return v.last;
  }
  return 0;
}

int statistic_value(const InvSeq& e, Statistic s) { return statistic_value(stats(e), s); }

std::string format_word(std::span<const int> word) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
  os << ')';
  return os.str();
}

}  // namespace invseq
