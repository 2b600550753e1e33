#include "invseq/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

namespace invseq {

namespace {

void check_size(int n, int bound) {
  if (n < 0) throw Error(Errc::size_too_large, "length must be non-negative");
  if (n > bound)
    throw Error(Errc::size_too_large,
                "length " + std::to_string(n) + " exceeds the practical bound " + std::to_string(bound));
}

constexpr std::uint8_t relation_mask(Relation r) {
  // bit 0: x<y, bit 1: x==y, bit 2: x>y
  switch (r) {
    case Relation::lt: return 1;
    case Relation::eq: return 2;
    case Relation::gt: return 4;
    case Relation::le: return 3;
    case Relation::ge: return 6;
    case Relation::ne: return 5;
    case Relation::any: return 7;
  }
  return 0;
}

inline std::uint8_t outcome(int x, int y) { return x < y ? 1 : (x == y ? 2 : 4); }

// Avoidance is prefix-hereditary, so a DFS only needs to reject occurrences
// that end at the newest position.
class Pruner {
 public:
  explicit Pruner(const PatternSet& ps) {
    for (const auto& p : ps.word_patterns) {
      if (p.size() == 3) add_triple(profile_triple(p));
      else general_.push_back(p);
    }
    for (const auto& t : ps.triples) add_triple(t);
  }

  bool accepts_last(const int* e, int len) const {
    if (len >= 3) {
      const int k = len - 1;
      const int x = e[k];
      for (const auto& t : triples_) {
        for (int j = 1; j < k; ++j) {
          if (!(t.m2 & outcome(e[j], x))) continue;
          for (int i = 0; i < j; ++i)
            if ((t.m1 & outcome(e[i], e[j])) && (t.m3 & outcome(e[i], x))) return false;
        }
      }
    }
    for (const auto& p : general_)
      if (contains_pattern_ending_at_last(std::span<const int>(e, static_cast<std::size_t>(len)), p)) return false;
    return true;
  }

 private:
  struct Masks {
    std::uint8_t m1, m2, m3;
  };
  void add_triple(const RelTriple& t) {
    triples_.push_back({relation_mask(t.rho1), relation_mask(t.rho2), relation_mask(t.rho3)});
  }

  std::vector<Masks> triples_;
  std::vector<Pattern> general_;
};

count_t count_from(const Pruner& pr, int* e, int pos, int n) {
  if (pos == n) return 1;
  count_t total = 0;
  for (int v = 0; v <= pos; ++v) {
    e[pos] = v;
    if (pr.accepts_last(e, pos + 1)) total += count_from(pr, e, pos + 1, n);
  }
  return total;
}

void visit_from(const Pruner& pr, std::vector<int>& e, int pos, int n,
                const std::function<void(const InvSeq&)>& visit) {
  if (pos == n) {
    visit(InvSeq(e));
    return;
  }
  for (int v = 0; v <= pos; ++v) {
    e[pos] = v;
    if (pr.accepts_last(e.data(), pos + 1)) visit_from(pr, e, pos + 1, n, visit);
  }
}

void collect_prefixes(const Pruner& pr, std::vector<int>& e, int pos, int depth,
                      std::vector<std::vector<int>>& out) {
  if (pos == depth) {
    out.push_back(std::vector<int>(e.begin(), e.begin() + depth));
    return;
  }
  for (int v = 0; v <= pos; ++v) {
    e[pos] = v;
    if (pr.accepts_last(e.data(), pos + 1)) collect_prefixes(pr, e, pos + 1, depth, out);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

InvSeqRange::iterator::iterator(int n) : current_(static_cast<std::size_t>(n), 0), done_(false) {
  check_size(n, kMaxEnumerationLength);
}

InvSeqRange::iterator& InvSeqRange::iterator::operator++() {
  // Odometer with digit i ranging over 0..i.
  for (int i = static_cast<int>(current_.size()) - 1; i >= 0; --i) {
    if (current_[i] < i) {
      ++current_[i];
      return *this;
    }
    current_[i] = 0;
  }
  done_ = true;
  return *this;
}

InvSeqRange iter_invseqs(int n) {
  check_size(n, kMaxEnumerationLength);
  return InvSeqRange(n);
}

PatternSet PatternSet::parse(std::string_view patterns_csv, const std::vector<std::string>& triples) {
  PatternSet ps;
  ps.word_patterns = parse_pattern_list(patterns_csv);
  for (const auto& t : triples) ps.triples.push_back(RelTriple::parse(t));
  return ps;
}

PatternSet PatternSet::of(std::initializer_list<std::string_view> patterns) {
  PatternSet ps;
  for (auto p : patterns) ps.word_patterns.push_back(Pattern::parse(p));
  return ps;
}

bool PatternSet::admits(std::span<const int> word) const {
  if (!avoids_all(word, word_patterns)) return false;
  for (const auto& t : triples)
    if (!avoids_triple(word, t)) return false;
  return true;
}

std::string PatternSet::label() const {
  std::string s;
  for (const auto& p : word_patterns) s += (s.empty() ? "" : ",") + p.to_string();
  for (const auto& t : triples) s += (s.empty() ? "" : ",") + t.to_string();
  return s;
}

count_t count_avoiders(int n, const PatternSet& ps, unsigned threads) {
  check_size(n, kMaxEnumerationLength);
  if (n == 0) return 1;
  const Pruner pr(ps);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  if (threads == 1 || n < 7) return count_from(pr, e.data(), 0, n);

  std::vector<std::vector<int>> prefixes;
  collect_prefixes(pr, e, 0, 5, prefixes);
  std::vector<count_t> partial(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<int> local(static_cast<std::size_t>(n), 0);
    for (std::size_t k; (k = next.fetch_add(1)) < prefixes.size();) {
      std::copy(prefixes[k].begin(), prefixes[k].end(), local.begin());
      partial[k] = count_from(pr, local.data(), 5, n);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  count_t total = 0;
  for (count_t c : partial) total = checked_add(total, c);
  return total;
}

count_t count_avoiders_scan(int n, const PatternSet& ps) {
  check_size(n, kMaxEnumerationLength);
  count_t total = 0;
  for (auto it = InvSeqRange(n).begin(); it != std::default_sentinel; ++it)
    if (ps.admits(it.word())) total = checked_add(total, 1);
  return total;
}

void for_each_avoider(int n, const PatternSet& ps, const std::function<void(const InvSeq&)>& visit) {
  check_size(n, kMaxEnumerationLength);
  const Pruner pr(ps);
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  visit_from(pr, e, 0, n, visit);
}

std::vector<InvSeq> avoiders(int n, const PatternSet& ps) {
  std::vector<InvSeq> out;
  for_each_avoider(n, ps, [&](const InvSeq& e) { out.push_back(e); });
  return out;
}

AvoidanceSequence avoidance_sequence(const PatternSet& ps, int nmax, unsigned threads) {
  check_size(nmax, kMaxEnumerationLength);
  AvoidanceSequence seq{ps.label(), {}};
  for (int n = 1; n <= nmax; ++n) seq.counts.push_back(count_avoiders(n, ps, threads));
  return seq;
}

std::map<int, count_t> distribution(int n, const PatternSet& ps, Statistic stat) {
  std::map<int, count_t> hist;
  for_each_avoider(n, ps, [&](const InvSeq& e) { ++hist[statistic_value(e, stat)]; });
  return hist;
}

std::map<int, count_t> distribution(int n, const PatternSet& ps, std::string_view stat) {
  return distribution(n, ps, parse_statistic(stat));
}

PatternPair PatternPair::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  auto list = parse_pattern_list(text);
  if (list.size() != 2) throw Error(Errc::parse_error, "a pattern pair needs exactly two patterns");
  return PatternPair{list[0], list[1]};
}

std::string PatternPair::to_string() const { return "(" + key() + ")"; }
std::string PatternPair::key() const { return first.to_string() + "," + second.to_string(); }

bool PatternPair::same_unordered(const PatternPair& o) const {
  return (first == o.first && second == o.second) || (first == o.second && second == o.first);
}

const std::vector<Pattern>& length3_patterns() {
  static const std::vector<Pattern> patterns = [] {
    std::vector<Pattern> v;
    for (auto s : {"000", "001", "010", "011", "012", "100", "101", "102", "110", "120", "201", "210", "021"})
      v.push_back(Pattern::parse(s));
    return v;
  }();
  return patterns;
}

std::vector<PatternPair> all_pattern_pairs() {
  const auto& p = length3_patterns();
  std::vector<PatternPair> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) out.push_back(PatternPair{p[i], p[j]});
  return out;
}

std::size_t WilfClassification::pair_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  return total;
}

const WilfClass* WilfClassification::class_of(const PatternPair& p) const {
  for (const auto& c : classes)
    for (const auto& m : c.members)
      if (m.same_unordered(p)) return &c;
  return nullptr;
}

WilfClassification wilf_classify(int nmax, unsigned threads) {
  check_size(nmax, kMaxEnumerationLength);
  std::map<std::vector<count_t>, std::vector<PatternPair>> groups;
  for (const auto& pair : all_pattern_pairs())
    groups[avoidance_sequence(pair.pattern_set(), nmax, threads).counts].push_back(pair);
  WilfClassification out;
  out.nmax = nmax;
  for (auto& [counts, members] : groups) out.classes.push_back(WilfClass{members, counts});
  std::stable_sort(out.classes.begin(), out.classes.end(), [](const WilfClass& a, const WilfClass& b) {
    if (a.counts.empty() || b.counts.empty()) return a.counts < b.counts;
    if (a.counts.back() != b.counts.back()) return a.counts.back() < b.counts.back();
    return a.counts < b.counts;
  });
  return out;
}

namespace {

void perm_dfs(std::vector<int>& perm, std::vector<bool>& used, int n, const std::vector<Pattern>& pats,
              const std::function<void(const std::vector<int>&)>& visit) {
  const int pos = static_cast<int>(perm.size());
  if (pos == n) {
    visit(perm);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    perm.push_back(v);
    bool ok = true;
    for (const auto& p : pats)
      if (contains_pattern_ending_at_last(perm, p)) {
        ok = false;
        break;
      }
    if (ok) {
      used[v] = true;
      perm_dfs(perm, used, n, pats, visit);
      used[v] = false;
    }
    perm.pop_back();
  }
}

void perm_walk(int n, std::span<const Permutation> patterns,
               const std::function<void(const std::vector<int>&)>& visit) {
  check_size(n, kMaxPermutationLength);
  std::vector<Pattern> pats;
  for (const auto& p : patterns) {
    std::vector<int> letters(p.values());
    for (int& v : letters) --v;
    pats.emplace_back(std::move(letters));
  }
  std::vector<int> perm;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  perm_dfs(perm, used, n, pats, visit);
}

}  // namespace

count_t count_perm_avoiders(int n, std::span<const Permutation> patterns) {
  count_t total = 0;
  perm_walk(n, patterns, [&](const std::vector<int>&) { ++total; });
  return total;
}

std::vector<Permutation> perm_avoiders(int n, std::span<const Permutation> patterns) {
  std::vector<Permutation> out;
  perm_walk(n, patterns, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

}  // namespace invseq
