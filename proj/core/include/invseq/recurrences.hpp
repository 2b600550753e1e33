#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "invseq/closed_forms.hpp"
#include "invseq/core.hpp"

namespace invseq {

// Dense table over 1 <= n <= nmax, 0 <= m < l <= n.
class IndexedTriangle {
 public:
  explicit IndexedTriangle(int nmax);

  int nmax() const noexcept { return nmax_; }
  static bool in_range(int n, int m, int l) noexcept { return n >= 1 && m >= 0 && m < l && l <= n; }

  count_t at(int n, int m, int l) const;     // throws IndexOutOfRange
  count_t value(int n, int m, int l) const;  // 0 outside the range
  void set(int n, int m, int l, count_t v);

  count_t total(int n) const;
  count_t total_positive(int n) const;  // cells with m >= 1

  // Visits every cell of row n with its (m, l, value).
  void for_each_cell(int n, const std::function<void(int m, int l, count_t v)>& fn) const;

  friend bool operator==(const IndexedTriangle&, const IndexedTriangle&) = default;

 private:
  std::size_t index(int n, int m, int l) const;
  int nmax_;
  std::vector<count_t> data_;
};

// a_{n,m,l}: (110,102)-avoiders whose largest entry m first occurs at position l.
IndexedTriangle a_triangle(int nmax);
// b_{n,m,l}: the same refinement for (102,120).
IndexedTriangle b_triangle(int nmax);
// c_{n,m,l}: (011,201)-avoiders with e_l = m the unique largest entry.
IndexedTriangle c_triangle(int nmax);
// z_{n,k}: (101,110)-avoiders with k zeros.
Triangle z_triangle(int nmax);

struct GenTreeLevel {
  std::map<std::pair<int, int>, count_t> labels;  // (p,q) -> multiplicity
  count_t total() const;
};

// Levels 1..nmax of the (p,q) generating tree rooted at (1,1).
std::vector<GenTreeLevel> gentree_levels(int nmax);
std::vector<count_t> gentree_counts(int nmax);
// (p,q) = (n - m1, m1 - m2) with m1 > m2 the two largest values of {e_i} u {-1}.
std::pair<int, int> gentree_parameters(const InvSeq& e);
std::vector<std::pair<int, int>> gentree_children(std::pair<int, int> label);

// Coefficients 0..nmax of A(t) = 1 + tA/(1 - tA^2).
std::vector<count_t> a106228_sequence(int nmax);

}  // namespace invseq
