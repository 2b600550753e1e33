#include <gtest/gtest.h>

#include "invseq/closed_forms.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/recurrences.hpp"

using namespace invseq;

namespace {

using Grid = std::vector<std::vector<count_t>>;

// Row m, column l-1 of the printed n-array.
Grid grid(const IndexedTriangle& t, int n) {
  Grid g(static_cast<std::size_t>(n), std::vector<count_t>(static_cast<std::size_t>(n)));
  for (int m = 0; m < n; ++m)
    for (int l = 1; l <= n; ++l) g[static_cast<std::size_t>(m)][static_cast<std::size_t>(l - 1)] = t.value(n, m, l);
  return g;
}

int first_max_position(const InvSeq& e, int* max_out) {
  int m = *std::max_element(e.begin(), e.end());
  *max_out = m;
  return static_cast<int>(std::find(e.begin(), e.end(), m) - e.begin()) + 1;
}

// Per-cell oracle: avoiders of ps with max m first occurring at l.
IndexedTriangle brute_first_max(int nmax, const PatternSet& ps) {
  IndexedTriangle t(nmax);
  for (int n = 1; n <= nmax; ++n)
    for_each_avoider(n, ps, [&](const InvSeq& e) {
      int m;
      int l = first_max_position(e, &m);
      t.set(n, m, l, t.value(n, m, l) + 1);
    });
  return t;
}

IndexedTriangle brute_unique_max(int nmax, const PatternSet& ps) {
  IndexedTriangle t(nmax);
  for (int n = 1; n <= nmax; ++n)
    for_each_avoider(n, ps, [&](const InvSeq& e) {
      int m;
      int l = first_max_position(e, &m);
      if (std::count(e.begin(), e.end(), m) == 1 || m == 0) t.set(n, m, l, t.value(n, m, l) + 1);
    });
  return t;
}

}  // namespace

TEST(ATriangle, PrintedArrays) {
  auto a = a_triangle(8);
  EXPECT_EQ(grid(a, 4), (Grid{{1, 0, 0, 0}, {0, 3, 2, 1}, {0, 0, 6, 3}, {0, 0, 0, 5}}));
  EXPECT_EQ(grid(a, 5), (Grid{{1, 0, 0, 0, 0}, {0, 4, 3, 2, 1}, {0, 0, 12, 8, 4}, {0, 0, 0, 19, 9}, {0, 0, 0, 0, 14}}));
  EXPECT_EQ(a.total(4), 21u);
  EXPECT_EQ(a.total(8), 4082u);
}

TEST(ATriangle, PerCellBruteForce) {
  auto a = a_triangle(7);
  auto brute = brute_first_max(7, PatternSet::of({"110", "102"}));
  // The brute triangle files the all-zero word under (m,l) = (0,1), the recurrence seed.
  EXPECT_EQ(a, brute);
}

TEST(BTriangle, PrintedArraysAndBruteForce) {
  auto b = b_triangle(8);
  EXPECT_EQ(grid(b, 4), (Grid{{1, 0, 0, 0}, {0, 4, 2, 1}, {0, 0, 5, 3}, {0, 0, 0, 5}}));
  EXPECT_EQ(grid(b, 5), (Grid{{1, 0, 0, 0, 0}, {0, 8, 4, 2, 1}, {0, 0, 13, 7, 4}, {0, 0, 0, 14, 9}, {0, 0, 0, 0, 14}}));
  EXPECT_EQ(b.at(5, 2, 3), 13u);
  EXPECT_EQ(b.total(8), 4082u);
  EXPECT_EQ(b_triangle(7), brute_first_max(7, PatternSet::of({"102", "120"})));
}

TEST(CTriangle, ValuesAndBruteForce) {
  auto c = c_triangle(8);
  EXPECT_EQ(c.at(3, 0, 1), 1u);
  EXPECT_EQ(c.at(3, 1, 2), 1u);
  EXPECT_EQ(c.at(3, 1, 3), 1u);
  EXPECT_EQ(c.at(3, 2, 3), 2u);
  EXPECT_EQ(c.value(3, 0, 2), 0u);
  EXPECT_EQ(c.total(3), 5u);
  EXPECT_EQ(c.total(8), 3091u);
  EXPECT_EQ(c_triangle(7), brute_unique_max(7, PatternSet::of({"011", "201"})));
}

TEST(Totals, MatchBruteForceUpTo10) {
  auto a = a_triangle(10), b = b_triangle(10), c = c_triangle(10);
  for (int n = 1; n <= 10; ++n) {
    auto s = formula_value(FormulaId::A279561, n);
    EXPECT_EQ(a.total(n), s) << n;
    EXPECT_EQ(b.total(n), s) << n;
    EXPECT_EQ(c.total(n), count_avoiders(n, PatternSet::of({"011", "201"}))) << n;
  }
  EXPECT_EQ(a.total(10), count_avoiders(10, PatternSet::of({"110", "102"})));
  EXPECT_EQ(b.total(10), count_avoiders(10, PatternSet::of({"102", "120"})));
}

TEST(ZTriangle, EqualsT) {
  auto z = z_triangle(10);
  EXPECT_EQ(z, triangle_T(10));
  EXPECT_EQ(z.row(5), (std::vector<count_t>{22, 31, 28, 10, 1}));
  EXPECT_EQ(z.row_sum(8), 11624u);
}

TEST(IndexedTriangle, Bounds) {
  IndexedTriangle t(4);
  EXPECT_THROW(t.at(4, 2, 2), Error);
  EXPECT_THROW(t.at(5, 0, 1), Error);
  EXPECT_EQ(t.value(4, 3, 2), 0u);
}

TEST(GenTree, Parameters) {
  EXPECT_EQ(gentree_parameters(InvSeq{0, 0, 2, 1}), std::make_pair(2, 1));
  EXPECT_EQ(gentree_parameters(InvSeq{0, 0, 0, 0}), std::make_pair(4, 1));
  auto kids = gentree_children({2, 2});
  EXPECT_EQ(kids.size(), 4u);
}

TEST(GenTree, LevelsAreParameterHistograms) {
  auto levels = gentree_levels(8);
  ASSERT_EQ(levels.size(), 8u);
  EXPECT_EQ(levels[0].labels, (std::map<std::pair<int, int>, count_t>{{{1, 1}, 1}}));
  auto triple = PatternSet::parse("", {"≠,≥,≥"});
  for (int n = 1; n <= 8; ++n) {
    std::map<std::pair<int, int>, count_t> h;
    for_each_avoider(n, triple, [&](const InvSeq& e) { ++h[gentree_parameters(e)]; });
    EXPECT_EQ(levels[static_cast<std::size_t>(n - 1)].labels, h) << n;
  }
}

TEST(GenTree, CountsUpTo10) {
  auto g = gentree_counts(10);
  auto triple = PatternSet::parse("", {"≠,≥,≥"});
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(g[static_cast<std::size_t>(n - 1)], count_avoiders(n, triple)) << n;
    EXPECT_EQ(g[static_cast<std::size_t>(n - 1)], count_avoiders(n, PatternSet::of({"100", "210", "120", "010"}))) << n;
  }
  EXPECT_EQ(g[7], 3091u);
}

TEST(A106228, Prefix) {
  EXPECT_EQ(a106228_sequence(8), (std::vector<count_t>{1, 1, 2, 6, 21, 80, 322, 1347, 5798}));
}
