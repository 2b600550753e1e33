#pragma once

#include <string_view>
#include <vector>

#include "invseq/error.hpp"

namespace invseq {

enum class FormulaId {
  N,
  LAZY,     // C(n,2)+1
  FIB1,     // F_{n+1}
  FIB2M1,   // F_{n+2}-1
  CAKE,     // C(n,3)+n
  POW2,     // 2^{n-1}
  POW2MN,   // 2^n-n
  VEX,      // 2^{n+1}-C(n+1,3)-2n-1
  FIBBIS,   // F_{2n-1}
  SUMPOW,   // sum_{k=0}^{n-1} (n-k)^k
  CATALAN,
  SCHRODER,  // large Schroder number, indexed so that n=1 gives 1
  BELL,
  A279561,  // 1+sum_{i=1}^{n-1} C(2i,i-1)
  A106228,  // no closed form; see oracle_value
  A074664,  // no closed form; see oracle_value
};

FormulaId parse_formula_id(std::string_view tag);
std::string_view to_string(FormulaId id);
const std::vector<FormulaId>& all_formula_ids();
bool has_closed_form(FormulaId id);

// Throws NoClosedForm for A106228 and A074664.
count_t formula_value(FormulaId id, int n);
// Closed form when there is one, otherwise the recurrence/series value.
count_t oracle_value(FormulaId id, int n);

count_t binomial(int n, int k);
count_t fibonacci(int n);  // F_0=0, F_1=1
count_t catalan(int n);
count_t large_schroder(int n);  // r_0=1, r_1=2, r_2=6, ...
count_t bell(int n);
count_t stirling2(int n, int k);  // 1 <= k <= n, else IndexOutOfRange

// Rows n = 1..nmax, columns first_col(n)..last_col(n).
class Triangle {
 public:
  enum class Shape { one_to_n, zero_to_n_minus_1 };

  Triangle(int nmax, Shape shape);

  int nmax() const noexcept { return nmax_; }
  Shape shape() const noexcept { return shape_; }
  int first_col(int /*n*/) const noexcept { return shape_ == Shape::one_to_n ? 1 : 0; }
  int last_col(int n) const noexcept { return shape_ == Shape::one_to_n ? n : n - 1; }
  bool defined(int n, int k) const noexcept;

  count_t at(int n, int k) const;     // throws IndexOutOfRange
  count_t value(int n, int k) const;  // 0 outside the defined range
  void set(int n, int k, count_t v);
  std::vector<count_t> row(int n) const;
  count_t row_sum(int n) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  int nmax_;
  Shape shape_;
  std::vector<std::vector<count_t>> rows_;  // rows_[n][k - first_col]
};

// T_{n,k} for 1 <= k <= n.
Triangle triangle_T(int nmax);
// d_{n,m}: Dyck paths of length n (weakly increasing h, h_i <= i-1) with h_n = m.
Triangle dyck_last(int nmax);
Triangle stirling2_triangle(int nmax);

}  // namespace invseq
