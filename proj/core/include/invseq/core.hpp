#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/error.hpp"

namespace invseq {

// A sequence e_1..e_n with 0 <= e_i <= i-1. Positions in the API are 0-based
// unless a name says otherwise; error indices are 1-based.
class InvSeq {
 public:
  InvSeq() = default;
  explicit InvSeq(std::vector<int> entries);  // validates
  InvSeq(std::initializer_list<int> entries) : InvSeq(std::vector<int>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::span<const int> span() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend auto operator<=>(const InvSeq&, const InvSeq&) = default;

 private:
  std::vector<int> entries_;
};

// Throws Error(out_of_range) naming the first bad 1-based index.
InvSeq validate_invseq(std::span<const int> word);
bool is_invseq(std::span<const int> word) noexcept;

class Pattern {
 public:
  explicit Pattern(std::vector<int> letters);  // rejects non-canonical words
  static Pattern parse(std::string_view text);  // "0012"

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::string to_string() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> letters_;
};

std::vector<Pattern> parse_pattern_list(std::string_view csv);

enum class Relation { lt, gt, le, ge, eq, ne, any };

constexpr bool holds(Relation r, int x, int y) noexcept {
  switch (r) {
    case Relation::lt: return x < y;
    case Relation::gt: return x > y;
    case Relation::le: return x <= y;
    case Relation::ge: return x >= y;
    case Relation::eq: return x == y;
    case Relation::ne: return x != y;
    case Relation::any: return true;
  }
  return false;
}

Relation parse_relation(std::string_view symbol);
std::string_view to_string(Relation r);

struct RelTriple {
  Relation rho1 = Relation::any;
  Relation rho2 = Relation::any;
  Relation rho3 = Relation::any;

  // "≥,≠,≥" or ">=,!=,>=" with optional parentheses; "-" is the full relation.
  static RelTriple parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const RelTriple&, const RelTriple&) = default;
};

// The exact (<,=,>) profile of a length-3 pattern as a relation triple.
RelTriple profile_triple(const Pattern& p);

class Permutation {
 public:
  explicit Permutation(std::vector<int> values);  // values must be 1..n
  static Permutation parse(std::string_view text);  // "2143" or "2,1,4,3"

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator[](std::size_t i) const { return values_[i]; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

InvSeq lehmer_code(const Permutation& pi);

bool contains_pattern(std::span<const int> word, const Pattern& p);
bool avoids_all(std::span<const int> word, std::span<const Pattern> ps);
bool avoids_triple(std::span<const int> e, const RelTriple& t);

// Occurrence checks restricted to occurrences that use the last letter of word.
bool contains_pattern_ending_at_last(std::span<const int> word, const Pattern& p);
bool contains_triple_ending_at_last(std::span<const int> word, const RelTriple& t);

struct StatVector {
  int asc = 0;
  int dist = 0;
  int rmin = 0;
  int zero = 0;
  int satu = 0;
  int rep = 0;
  int last = 0;

  friend bool operator==(const StatVector&, const StatVector&) = default;
};

StatVector stats(const InvSeq& e);

enum class Statistic { asc, dist, rmin, zero, satu, rep, last };

Statistic parse_statistic(std::string_view name);
std::string_view to_string(Statistic s);
int statistic_value(const StatVector& v, Statistic s);
int statistic_value(const InvSeq& e, Statistic s);

std::string format_word(std::span<const int> word);  // "(0,0,2,1)"

}  // namespace invseq
