#include "invseq/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "invseq/recurrences.hpp"

namespace invseq {

namespace {

struct Named {
  FormulaId id;
  std::string_view tag;
};

constexpr std::array<Named, 16> kNames{{
    {FormulaId::N, "N"},
    {FormulaId::LAZY, "LAZY"},
    {FormulaId::FIB1, "FIB1"},
    {FormulaId::FIB2M1, "FIB2M1"},
    {FormulaId::CAKE, "CAKE"},
    {FormulaId::POW2, "POW2"},
    {FormulaId::POW2MN, "POW2MN"},
    {FormulaId::VEX, "VEX"},
    {FormulaId::FIBBIS, "FIBBIS"},
    {FormulaId::SUMPOW, "SUMPOW"},
    {FormulaId::CATALAN, "CATALAN"},
    {FormulaId::SCHRODER, "SCHRODER"},
    {FormulaId::BELL, "BELL"},
    {FormulaId::A279561, "A279561"},
    {FormulaId::A106228, "A106228"},
    {FormulaId::A074664, "A074664"},
}};

count_t pow_checked(count_t base, int exp) {
  count_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

count_t sub_checked(count_t a, count_t b) {
  if (b > a) throw Error(Errc::overflow, "negative intermediate in closed form");
  return a - b;
}

void require_positive(int n) {
  if (n < 1) throw Error(Errc::index_out_of_range, "closed forms are defined for n >= 1");
}

}  // namespace

FormulaId parse_formula_id(std::string_view tag) {
  for (const auto& [id, name] : kNames) {
    if (tag.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < tag.size() && same; ++i)
      same = std::toupper(static_cast<unsigned char>(tag[i])) == name[i];
    if (same) return id;
  }
  throw Error(Errc::unknown_name, "unknown formula id '" + std::string(tag) + "'");
}

std::string_view to_string(FormulaId id) {
  for (const auto& [fid, name] : kNames)
    if (fid == id) return name;
  return "?";
}

const std::vector<FormulaId>& all_formula_ids() {
  static const std::vector<FormulaId> ids = [] {
    std::vector<FormulaId> v;
    for (const auto& n : kNames) v.push_back(n.id);
    return v;
  }();
  return ids;
}

bool has_closed_form(FormulaId id) { return id != FormulaId::A106228 && id != FormulaId::A074664; }

count_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // Pascal rows, exact and overflow-checked.
  std::vector<count_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<count_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = checked_add(row[j - 1], row[j]);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

count_t fibonacci(int n) {
  if (n < 0) throw Error(Errc::index_out_of_range, "Fibonacci index must be non-negative");
  count_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    count_t c = checked_add(a, b);
    a = b;
    b = c;
  }
  return a;
}

count_t catalan(int n) {
  if (n < 0) throw Error(Errc::index_out_of_range, "Catalan index must be non-negative");
  std::vector<count_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j) c[i] = checked_add(c[i], checked_mul(c[j], c[i - 1 - j]));
  return c[static_cast<std::size_t>(n)];
}

count_t large_schroder(int n) {
  if (n < 0) throw Error(Errc::index_out_of_range, "Schroder index must be non-negative");
  // r_n = r_{n-1} + sum_{k=0}^{n-1} r_k r_{n-1-k}
  std::vector<count_t> r(static_cast<std::size_t>(n) + 1, 0);
  r[0] = 1;
  for (int i = 1; i <= n; ++i) {
    count_t s = r[i - 1];
    for (int k = 0; k < i; ++k) s = checked_add(s, checked_mul(r[k], r[i - 1 - k]));
    r[i] = s;
  }
  return r[static_cast<std::size_t>(n)];
}

count_t bell(int n) {
  if (n < 0) throw Error(Errc::index_out_of_range, "Bell index must be non-negative");
  if (n == 0) return 1;
  count_t total = 0;
  for (int k = 1; k <= n; ++k) total = checked_add(total, stirling2(n, k));
  return total;
}

count_t stirling2(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw Error(Errc::index_out_of_range,
                "S(" + std::to_string(n) + "," + std::to_string(k) + ") needs 1 <= k <= n");
  return stirling2_triangle(n).at(n, k);
}

count_t formula_value(FormulaId id, int n) {
  require_positive(n);
  switch (id) {
    case FormulaId::N: return static_cast<count_t>(n);
    case FormulaId::LAZY: return checked_add(binomial(n, 2), 1);
    case FormulaId::FIB1: return fibonacci(n + 1);
    case FormulaId::FIB2M1: return fibonacci(n + 2) - 1;
    case FormulaId::CAKE: return checked_add(binomial(n, 3), static_cast<count_t>(n));
    case FormulaId::POW2: return pow_checked(2, n - 1);
    case FormulaId::POW2MN: return sub_checked(pow_checked(2, n), static_cast<count_t>(n));
    case FormulaId::VEX:
      return sub_checked(pow_checked(2, n + 1), checked_add(binomial(n + 1, 3), 2 * static_cast<count_t>(n) + 1));
    case FormulaId::FIBBIS: return fibonacci(2 * n - 1);
    case FormulaId::SUMPOW: {
      count_t s = 0;
      for (int k = 0; k <= n - 1; ++k) s = checked_add(s, pow_checked(static_cast<count_t>(n - k), k));
      return s;
    }
    case FormulaId::CATALAN: return catalan(n);
    case FormulaId::SCHRODER: return large_schroder(n - 1);
    case FormulaId::BELL: return bell(n);
    case FormulaId::A279561: {
      count_t s = 1;
      for (int i = 1; i <= n - 1; ++i) s = checked_add(s, binomial(2 * i, i - 1));
      return s;
    }
    case FormulaId::A106228:
    case FormulaId::A074664:
      throw Error(Errc::no_closed_form, std::string(to_string(id)) + " has no closed form; use oracle_value");
  }
  throw Error(Errc::unknown_name, "unhandled formula id");
}

count_t oracle_value(FormulaId id, int n) {
  require_positive(n);
  if (id == FormulaId::A106228) return a106228_sequence(n).at(static_cast<std::size_t>(n));
  if (id == FormulaId::A074664) return triangle_T(n).row_sum(n);
  return formula_value(id, n);
}

Triangle::Triangle(int nmax, Shape shape) : nmax_(nmax), shape_(shape) {
  if (nmax < 0) throw Error(Errc::index_out_of_range, "triangle size must be non-negative");
  rows_.resize(static_cast<std::size_t>(nmax) + 1);
  for (int n = 1; n <= nmax; ++n) rows_[n].assign(static_cast<std::size_t>(last_col(n) - first_col(n) + 1), 0);
}

bool Triangle::defined(int n, int k) const noexcept {
  return n >= 1 && n <= nmax_ && k >= first_col(n) && k <= last_col(n);
}

count_t Triangle::at(int n, int k) const {
  if (!defined(n, k))
    throw Error(Errc::index_out_of_range, "(" + std::to_string(n) + "," + std::to_string(k) + ") outside triangle");
  return rows_[n][static_cast<std::size_t>(k - first_col(n))];
}

count_t Triangle::value(int n, int k) const { return defined(n, k) ? at(n, k) : 0; }

void Triangle::set(int n, int k, count_t v) {
  if (!defined(n, k))
    throw Error(Errc::index_out_of_range, "(" + std::to_string(n) + "," + std::to_string(k) + ") outside triangle");
  rows_[n][static_cast<std::size_t>(k - first_col(n))] = v;
}

std::vector<count_t> Triangle::row(int n) const {
  if (n < 1 || n > nmax_) throw Error(Errc::index_out_of_range, "row " + std::to_string(n) + " outside triangle");
  return rows_[n];
}

count_t Triangle::row_sum(int n) const {
  count_t s = 0;
  for (count_t v : row(n)) s = checked_add(s, v);
  return s;
}

Triangle triangle_T(int nmax) {
  Triangle t(nmax, Triangle::Shape::one_to_n);
  if (nmax >= 1) t.set(1, 1, 1);
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k <= n; ++k) {
      count_t v = checked_add(t.value(n - 1, k - 1), checked_mul(static_cast<count_t>(k), t.value(n - 1, k)));
      for (int j = k + 1; j <= n - 1; ++j) v = checked_add(v, t.value(n - 1, j));
      t.set(n, k, v);
    }
  return t;
}

Triangle dyck_last(int nmax) {
  Triangle d(nmax, Triangle::Shape::zero_to_n_minus_1);
  if (nmax >= 1) d.set(1, 0, 1);
  // Extending a path of length n-1 ending at height j by a step of height m >= j, m <= n-1.
  for (int n = 2; n <= nmax; ++n)
    for (int m = 0; m <= n - 1; ++m) {
      count_t v = 0;
      for (int j = 0; j <= std::min(m, n - 2); ++j) v = checked_add(v, d.value(n - 1, j));
      d.set(n, m, v);
    }
  return d;
}

Triangle stirling2_triangle(int nmax) {
  Triangle s(nmax, Triangle::Shape::one_to_n);
  if (nmax >= 1) s.set(1, 1, 1);
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k <= n; ++k)
      s.set(n, k, checked_add(checked_mul(static_cast<count_t>(k), s.value(n - 1, k)), s.value(n - 1, k - 1)));
  return s;
}

}  // namespace invseq
