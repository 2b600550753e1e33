#include "invseq/recurrences.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace invseq {

IndexedTriangle::IndexedTriangle(int nmax) : nmax_(nmax) {
  if (nmax < 0) throw Error(Errc::index_out_of_range, "triangle size must be non-negative");
  const auto side = static_cast<std::size_t>(nmax) + 1;
  data_.assign(side * side * side, 0);
}

std::size_t IndexedTriangle::index(int n, int m, int l) const {
  const auto side = static_cast<std::size_t>(nmax_) + 1;
  return (static_cast<std::size_t>(n) * side + static_cast<std::size_t>(m)) * side + static_cast<std::size_t>(l);
}

count_t IndexedTriangle::at(int n, int m, int l) const {
  if (!in_range(n, m, l) || n > nmax_)
    throw Error(Errc::index_out_of_range,
                "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) + ") outside 0<=m<l<=n");
  return data_[index(n, m, l)];
}

count_t IndexedTriangle::value(int n, int m, int l) const {
  return (in_range(n, m, l) && n <= nmax_) ? data_[index(n, m, l)] : 0;
}

void IndexedTriangle::set(int n, int m, int l, count_t v) {
  if (!in_range(n, m, l) || n > nmax_)
    throw Error(Errc::index_out_of_range, "cell outside 0<=m<l<=n");
  data_[index(n, m, l)] = v;
}

count_t IndexedTriangle::total(int n) const {
  count_t s = 0;
  for_each_cell(n, [&](int, int, count_t v) { s = checked_add(s, v); });
  return s;
}

count_t IndexedTriangle::total_positive(int n) const {
  count_t s = 0;
  for_each_cell(n, [&](int m, int, count_t v) {
    if (m >= 1) s = checked_add(s, v);
  });
  return s;
}

void IndexedTriangle::for_each_cell(int n, const std::function<void(int, int, count_t)>& fn) const {
  if (n < 1 || n > nmax_) throw Error(Errc::index_out_of_range, "row outside triangle");
  for (int l = 1; l <= n; ++l)
    for (int m = 0; m < l; ++m) fn(m, l, data_[index(n, m, l)]);
}

namespace {

void seed_zero_row(IndexedTriangle& t, int n) { t.set(n, 0, 1, 1); }

count_t sub_checked(count_t a, count_t b) {
  if (b > a) throw Error(Errc::overflow, "recurrence produced a negative cell");
  return a - b;
}

}  // namespace

IndexedTriangle a_triangle(int nmax) {
  IndexedTriangle a(nmax);
  const Triangle d = dyck_last(std::max(nmax, 1));
  for (int n = 1; n <= nmax; ++n) {
    seed_zero_row(a, n);
    for (int l = 2; l <= n; ++l)
      for (int m = 1; m < l; ++m) {
        // The inner j-sum stops at m-1: deleting the unique largest entry m leaves a smaller maximum.
        count_t v = checked_add(d.value(n - 1, m), d.value(l - 1, m - 1));
        count_t minus = d.value(l - 1, m) + ((m == 1 && l == 2) ? 1 : 0);
        for (int j = 0; j <= m - 1; ++j)
          for (int k = l - 1; k <= n - 1; ++k) v = checked_add(v, a.value(n - 1, j, k));
        a.set(n, m, l, sub_checked(v, minus));
      }
  }
  return a;
}

IndexedTriangle b_triangle(int nmax) {
  IndexedTriangle b(nmax);
  const Triangle d = dyck_last(std::max(nmax, 1));
  for (int n = 1; n <= nmax; ++n) {
    seed_zero_row(b, n);
    for (int l = 2; l <= n; ++l)
      for (int m = 1; m < l; ++m) {
        count_t v = d.value(l, m - 1);
        for (int j = 1; j <= m; ++j)
          for (int k = l; k <= n - 1; ++k) v = checked_add(v, b.value(n - 1, j, k));
        b.set(n, m, l, v);
      }
  }
  return b;
}

IndexedTriangle c_triangle(int nmax) {
  IndexedTriangle c(nmax);
  for (int n = 1; n <= nmax; ++n) {
    seed_zero_row(c, n);
    for (int l = 2; l <= n; ++l)
      for (int m = 1; m < l; ++m) {
        count_t v = 0;
        for (int j = 0; j <= m - 1; ++j)
          for (int i = j + 1; i <= l; ++i) v = checked_add(v, c.value(n - 1, j, i));
        c.set(n, m, l, v);
      }
  }
  return c;
}

Triangle z_triangle(int nmax) {
  Triangle z(nmax, Triangle::Shape::one_to_n);
  if (nmax >= 1) z.set(1, 1, 1);
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k <= n; ++k) {
      count_t v = checked_add(z.value(n - 1, k - 1), checked_mul(static_cast<count_t>(k), z.value(n - 1, k)));
      for (int j = k + 1; j <= n - 1; ++j) v = checked_add(v, z.value(n - 1, j));
      z.set(n, k, v);
    }
  return z;
}

count_t GenTreeLevel::total() const {
  count_t s = 0;
  for (const auto& [label, c] : labels) s = checked_add(s, c);
  return s;
}

std::vector<std::pair<int, int>> gentree_children(std::pair<int, int> label) {
  const auto [p, q] = label;
  std::vector<std::pair<int, int>> out;
  for (int i = q; i >= 1; --i) out.emplace_back(p + 1, i);
  for (int i = 1; i <= p; ++i) out.emplace_back(p + 1 - i, i);
  return out;
}

std::vector<GenTreeLevel> gentree_levels(int nmax) {
  std::vector<GenTreeLevel> levels;
  if (nmax < 1) return levels;
  levels.push_back(GenTreeLevel{{{{1, 1}, 1}}});
  for (int n = 2; n <= nmax; ++n) {
    GenTreeLevel next;
    for (const auto& [label, mult] : levels.back().labels)
      for (const auto& child : gentree_children(label)) next.labels[child] = checked_add(next.labels[child], mult);
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<count_t> gentree_counts(int nmax) {
  std::vector<count_t> out;
  for (const auto& level : gentree_levels(nmax)) out.push_back(level.total());
  return out;
}

std::pair<int, int> gentree_parameters(const InvSeq& e) {
  std::set<int> values(e.begin(), e.end());
  values.insert(-1);
  auto it = values.rbegin();
  const int m1 = *it;
  const int m2 = (values.size() > 1) ? *std::next(it) : -1;
  return {static_cast<int>(e.size()) - m1, m1 - m2};
}

std::vector<count_t> a106228_sequence(int nmax) {
  if (nmax < 0) throw Error(Errc::index_out_of_range, "sequence length must be non-negative");
  const auto len = static_cast<std::size_t>(nmax) + 1;
  auto mul = [&](const std::vector<count_t>& f, const std::vector<count_t>& g) {
    std::vector<count_t> h(len, 0);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j < len; ++j) h[i + j] = checked_add(h[i + j], checked_mul(f[i], g[j]));
    return h;
  };
  auto times_t = [&](std::vector<count_t> f) {
    f.insert(f.begin(), 0);
    f.resize(len);
    return f;
  };
  std::vector<count_t> a(len, 0);
  a[0] = 1;
  // Coefficient n of the right side only reads coefficients < n, so nmax+1 passes reach the fixpoint.
  for (std::size_t pass = 0; pass < len; ++pass) {
    const auto ta2 = times_t(mul(a, a));
    std::vector<count_t> geom(len, 0), power(len, 0);
    geom[0] = power[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
      power = mul(power, ta2);
      for (std::size_t i = 0; i < len; ++i) geom[i] = checked_add(geom[i], power[i]);
    }
    auto next = times_t(mul(a, geom));
    next[0] = checked_add(next[0], 1);
    a = std::move(next);
  }
  return a;
}

}  // namespace invseq
