#include <gtest/gtest.h>

#include "invseq/closed_forms.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/tables.hpp"

using namespace invseq;

TEST(Formula, Examples) {
  EXPECT_EQ(formula_value(FormulaId::LAZY, 8), 29u);
  EXPECT_EQ(formula_value(FormulaId::A279561, 8), 4082u);
  EXPECT_EQ(formula_value(FormulaId::SUMPOW, 8), 733u);
  EXPECT_EQ(formula_value(FormulaId::VEX, 8), 411u);
  EXPECT_EQ(formula_value(FormulaId::SCHRODER, 8), 8558u);
  EXPECT_EQ(formula_value(FormulaId::BELL, 8), 4140u);
  EXPECT_EQ(formula_value(FormulaId::FIBBIS, 8), 610u);
}

TEST(Formula, DelegatedSequences) {
  for (auto id : {FormulaId::A106228, FormulaId::A074664}) {
    EXPECT_FALSE(has_closed_form(id));
    try {
      formula_value(id, 5);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::no_closed_form);
    }
  }
  EXPECT_EQ(oracle_value(FormulaId::A106228, 8), 5798u);
  EXPECT_EQ(oracle_value(FormulaId::A074664, 8), 11624u);
}

TEST(Formula, Names) {
  EXPECT_EQ(parse_formula_id("schroder"), FormulaId::SCHRODER);
  EXPECT_EQ(to_string(FormulaId::FIB2M1), "FIB2M1");
  EXPECT_THROW(parse_formula_id("nope"), Error);
  EXPECT_EQ(all_formula_ids().size(), 16u);
}

TEST(Formula, FibonacciIdentities) {
  for (int n = 3; n <= 30; ++n) EXPECT_EQ(fibonacci(n), fibonacci(n - 1) + fibonacci(n - 2));
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(formula_value(FormulaId::FIB1, n), fibonacci(n + 1));
    EXPECT_EQ(formula_value(FormulaId::FIB2M1, n), fibonacci(n + 2) - 1);
    EXPECT_EQ(formula_value(FormulaId::FIBBIS, n), fibonacci(2 * n - 1));
  }
}

TEST(Formula, AgreesWithEnumerationUpTo9) {
  for (TableId t : {TableId::one, TableId::two})
    for (const auto& row : table_rows(t)) {
      if (!row.formula) continue;
      for (int n = 1; n <= 9; ++n)
        ASSERT_EQ(oracle_value(*row.formula, n), count_avoiders(n, row.pair.pattern_set())) << row.pair.to_string() << " n=" << n;
    }
}

TEST(Stirling, Values) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(stirling2(n, n), 1u);
    EXPECT_EQ(stirling2(n, 1), 1u);
  }
  EXPECT_EQ(stirling2(4, 2), 7u);
  count_t sum = 0;
  for (int k = 1; k <= 8; ++k) sum += stirling2(8, k);
  EXPECT_EQ(sum, 4140u);
  try {
    stirling2(3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::index_out_of_range);
  }
  EXPECT_THROW(stirling2(3, 0), Error);
}

TEST(TriangleT, Values) {
  auto T = triangle_T(9);
  EXPECT_EQ(T.at(5, 1), 22u);
  EXPECT_EQ(T.at(5, 3), 28u);
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(T.at(n, n), 1u);
  EXPECT_EQ(T.row_sum(8), 11624u);
  std::vector<count_t> sums;
  for (int n = 1; n <= 8; ++n) sums.push_back(T.row_sum(n));
  EXPECT_EQ(sums, (std::vector<count_t>{1, 2, 6, 22, 92, 426, 2146, 11624}));
  EXPECT_THROW(T.at(3, 0), Error);
  EXPECT_EQ(T.value(3, 0), 0u);
}

TEST(DyckLast, Values) {
  auto d = dyck_last(10);
  EXPECT_EQ(d.at(3, 0), 1u);
  EXPECT_EQ(d.at(3, 1), 2u);
  EXPECT_EQ(d.at(3, 2), 2u);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(d.row_sum(n), catalan(n)) << n;
    EXPECT_EQ(d.at(n, n - 1), catalan(n - 1)) << n;
  }
}

TEST(Binomial, PascalExact) {
  EXPECT_EQ(binomial(64, 32), 1832624140942590534u);
  EXPECT_EQ(binomial(5, 7), 0u);
}
