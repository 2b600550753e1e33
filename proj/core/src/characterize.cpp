#include <algorithm>
#include <set>

#include "invseq/enumerate.hpp"

namespace invseq {

namespace {

using Seq = std::span<const int>;

// Length of the maximal strictly increasing prefix (at least 1 for n >= 1).
std::size_t strict_prefix(Seq e) {
  std::size_t t = 1;
  while (t < e.size() && e[t - 1] < e[t]) ++t;
  return t;
}

// End (exclusive) of the run of entries equal to e[from].
std::size_t run_end(Seq e, std::size_t from) {
  std::size_t s = from;
  while (s < e.size() && e[s] == e[from]) ++s;
  return s;
}

bool all_equal(Seq e, std::size_t from, int value) {
  return std::all_of(e.begin() + static_cast<std::ptrdiff_t>(from), e.end(), [&](int v) { return v == value; });
}

bool all_zero(Seq e) { return all_equal(e, 0, 0); }

std::vector<int> positives(Seq e) {
  std::vector<int> p;
  for (int v : e)
    if (v > 0) p.push_back(v);
  return p;
}

// e_1<...<e_t=...=e_s, returns s (exclusive end of the plateau).
std::size_t plateau_end(Seq e) { return run_end(e, strict_prefix(e) - 1); }

bool c001_010(Seq e) {
  // e_1<...<e_t=e_{t+1}=...=e_n
  return plateau_end(e) == e.size();
}

bool c001_011(Seq e) {
  if (all_zero(e)) return true;
  std::size_t t = strict_prefix(e);
  if (t < 2) return false;
  return t == e.size() || all_equal(e, t, 0);
}

bool c001_012(Seq e) {
  if (all_zero(e)) return true;
  if (e.size() < 2 || e[1] != 1) return false;
  std::size_t t = run_end(e, 1);
  return all_equal(e, t, 0);
}

bool c001_110(Seq e) {
  // e_1<...<e_t >= e_{t+1}=...=e_n
  std::size_t t = strict_prefix(e);
  return t == e.size() || all_equal(e, t, e[t]);
}

bool c001_021(Seq e) {
  std::size_t s = plateau_end(e);
  return s == e.size() || all_equal(e, s, 0);
}

bool c001_120(Seq e) {
  std::size_t t = strict_prefix(e);
  std::size_t s = run_end(e, t - 1);
  if (s == e.size()) return true;
  // The tail repeats e_{t-1}, the entry just below the plateau.
  return t >= 2 && all_equal(e, s, e[t - 2]);
}

bool c001_100(Seq e) {
  std::size_t s = plateau_end(e);
  for (std::size_t i = s; i < e.size(); ++i)
    if (e[i] >= e[i - 1]) return false;
  return true;
}

bool c001_210(Seq e) {
  std::size_t s = plateau_end(e);
  return s == e.size() || (e[s] < e[s - 1] && all_equal(e, s, e[s]));
}

bool c012_021(Seq e) {
  auto first = std::find_if(e.begin(), e.end(), [](int v) { return v > 0; });
  if (first == e.end()) return true;
  int v = *first;
  return std::all_of(first, e.end(), [&](int x) { return x == 0 || x == v; });
}

bool weakly_decreasing(const std::vector<int>& p) {
  return std::is_sorted(p.rbegin(), p.rend());
}

bool c110_012(Seq e) {
  if (!weakly_decreasing(positives(e))) return false;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    bool repeated = std::find(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(j), e[j]) !=
                    e.begin() + static_cast<std::ptrdiff_t>(j);
    if (repeated && !all_equal(e, j + 1, e[j])) return false;
  }
  return true;
}

bool c012_210(Seq e) {
  auto p = positives(e);
  if (!weakly_decreasing(p)) return false;
  std::set<int> distinct(p.begin(), p.end());
  if (distinct.size() > 2) return false;
  if (distinct.size() == 2) {
    int least = *distinct.begin();
    auto l = static_cast<std::size_t>(std::find(e.begin(), e.end(), least) - e.begin());
    return all_equal(e, l, least);
  }
  return true;
}

bool c010_011(Seq e) {
  // 0=e_1=...=e_t<e_{t+1}, entries from e_t on pairwise distinct
  std::size_t t = run_end(e, 0);
  std::set<int> seen;
  for (std::size_t i = t - 1; i < e.size(); ++i)
    if (!seen.insert(e[i]).second) return false;
  return true;
}

bool c010_012(Seq e) {
  if (all_zero(e)) return true;
  std::size_t t = run_end(e, 0);
  if (e[t] == 0) return false;
  for (std::size_t i = t + 1; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return e.back() > 0;
}

bool c010_021(Seq e) { return std::is_sorted(e.begin(), e.end()); }

bool c011_012(Seq e) {
  auto p = positives(e);
  return std::adjacent_find(p.begin(), p.end(), [](int a, int b) { return a <= b; }) == p.end();
}

bool c021(Seq e) {
  auto p = positives(e);
  return std::is_sorted(p.begin(), p.end());
}

bool c001(Seq e) {
  std::size_t t = strict_prefix(e);
  for (std::size_t i = t; i < e.size(); ++i)
    if (e[i] > e[i - 1]) return false;
  return true;
}

bool c210(Seq e) {
  // Weak left-to-right maxima are weakly increasing by construction; the rest must be too.
  int running_max = -1;
  int last_other = -1;
  for (int v : e) {
    if (v >= running_max) {
      running_max = v;
    } else {
      if (v < last_other) return false;
      last_other = v;
    }
  }
  return true;
}

bool c011(Seq e) {
  auto p = positives(e);
  std::set<int> distinct(p.begin(), p.end());
  return distinct.size() == p.size();
}

bool c000(Seq e) {
  std::map<int, int> freq;
  for (int v : e)
    if (++freq[v] > 2) return false;
  return true;
}

struct Entry {
  const char* id;
  bool (*test)(Seq);
};

constexpr Entry kClasses[] = {
    {"001,010", c001_010}, {"001,011", c001_011}, {"001,012", c001_012}, {"001,110", c001_110},
    {"001,021", c001_021}, {"001,120", c001_120}, {"001,100", c001_100}, {"001,210", c001_210},
    {"012,021", c012_021}, {"110,012", c110_012}, {"012,210", c012_210}, {"010,011", c010_011},
    {"010,012", c010_012}, {"010,021", c010_021}, {"011,012", c011_012}, {"021", c021},
    {"001", c001},         {"210", c210},         {"011", c011},         {"000", c000},
};

std::string normalize_id(std::string_view id) {
  std::string s;
  for (char c : id)
    if (c != '(' && c != ')' && c != ' ') s += c;
  return s;
}

const Entry& find_class(std::string_view class_id) {
  const std::string id = normalize_id(class_id);
  for (const auto& c : kClasses)
    if (id == c.id) return c;
  throw Error(Errc::unknown_class_id, "no structural characterization for '" + std::string(class_id) + "'");
}

}  // namespace

std::vector<std::string> characterized_classes() {
  std::vector<std::string> out;
  for (const auto& c : kClasses) out.emplace_back(c.id);
  return out;
}

std::vector<Pattern> characterized_patterns(std::string_view class_id) {
  return parse_pattern_list(find_class(class_id).id);
}

bool matches_characterization(std::string_view class_id, std::span<const int> e) {
  const auto& c = find_class(class_id);
  if (e.empty()) return true;
  return c.test(e);
}

}  // namespace invseq
