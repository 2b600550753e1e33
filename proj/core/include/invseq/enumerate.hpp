#pragma once

#include <array>
#include <functional>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/core.hpp"

namespace invseq {

inline constexpr int kMaxEnumerationLength = 14;
inline constexpr int kMaxPermutationLength = 10;

// Lexicographic stream over I_n.
class InvSeqRange {
 public:
  class iterator {
   public:
    using value_type = InvSeq;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(int n);

    InvSeq operator*() const { return InvSeq(current_); }
    const std::vector<int>& word() const noexcept { return current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

   private:
    std::vector<int> current_;
    bool done_ = true;
  };

  explicit InvSeqRange(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  int n_;
};

InvSeqRange iter_invseqs(int n);

struct PatternSet {
  std::vector<Pattern> word_patterns;
  std::vector<RelTriple> triples;

  static PatternSet parse(std::string_view patterns_csv, const std::vector<std::string>& triples = {});
  static PatternSet of(std::initializer_list<std::string_view> patterns);

  bool empty() const noexcept { return word_patterns.empty() && triples.empty(); }
  // Reference predicate: naive scans for every member.
  bool admits(std::span<const int> word) const;
  std::string label() const;
};

struct AvoidanceSequence {
  std::string label;
  std::vector<count_t> counts;  // counts[n-1] = a_n

  count_t at(int n) const { return counts.at(static_cast<std::size_t>(n - 1)); }
};

// Pruned depth-first count. threads == 0 uses the hardware concurrency.
count_t count_avoiders(int n, const PatternSet& ps, unsigned threads = 0);
// Exhaustive scan of I_n with the naive predicates; the reference for count_avoiders.
count_t count_avoiders_scan(int n, const PatternSet& ps);
// Visits every avoider of length n in lexicographic order.
void for_each_avoider(int n, const PatternSet& ps, const std::function<void(const InvSeq&)>& visit);
std::vector<InvSeq> avoiders(int n, const PatternSet& ps);

AvoidanceSequence avoidance_sequence(const PatternSet& ps, int nmax, unsigned threads = 0);

std::map<int, count_t> distribution(int n, const PatternSet& ps, Statistic stat);
std::map<int, count_t> distribution(int n, const PatternSet& ps, std::string_view stat);

struct PatternPair {
  Pattern first;
  Pattern second;

  static PatternPair parse(std::string_view text);  // "001,010" or "(001,010)"
  std::string to_string() const;                    // "(001,010)"
  std::string key() const;                          // "001,010"
  PatternSet pattern_set() const { return PatternSet{{first, second}, {}}; }
  bool same_unordered(const PatternPair& o) const;
};

// 000,001,010,011,012,100,101,102,110,120,201,210,021
const std::vector<Pattern>& length3_patterns();
// The 78 unordered pairs of distinct length-3 patterns.
std::vector<PatternPair> all_pattern_pairs();

struct WilfClass {
  std::vector<PatternPair> members;
  std::vector<count_t> counts;  // a_1..a_nmax
};

struct WilfClassification {
  int nmax = 0;
  std::vector<WilfClass> classes;  // ordered by a_nmax, then by count vector

  std::size_t pair_count() const;
  const WilfClass* class_of(const PatternPair& p) const;
};

WilfClassification wilf_classify(int nmax, unsigned threads = 0);

count_t count_perm_avoiders(int n, std::span<const Permutation> patterns);
std::vector<Permutation> perm_avoiders(int n, std::span<const Permutation> patterns);

// Structural shape tests; see characterize.cpp for the list of ids.
std::vector<std::string> characterized_classes();
std::vector<Pattern> characterized_patterns(std::string_view class_id);
bool matches_characterization(std::string_view class_id, std::span<const int> e);

}  // namespace invseq
