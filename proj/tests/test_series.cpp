#include <gtest/gtest.h>

#include <random>

#include "invseq/closed_forms.hpp"
#include "invseq/enumerate.hpp"
#include "invseq/recurrences.hpp"
#include "invseq/series.hpp"

using namespace invseq;

namespace {

Fps ints(std::initializer_list<long> c, int order) {
  std::vector<BigRational> v;
  for (long x : c) v.emplace_back(x);
  return Fps::from(v, order);
}

BigRational q(const char* s) { return parse_rational(s); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(q("6/4")), "3/2");
  EXPECT_EQ(to_string(q("-1/2")), "-1/2");
  EXPECT_EQ(to_string(q(" 7 ")), "7");
  for (auto bad : {"", "1/0", "a", "1/-2", "1//2"}) EXPECT_THROW(q(bad), Error) << bad;
}

TEST(Fps, SqrtOfOneMinus4x) {
  auto s = sqrt(ints({1, -4}, 6));
  EXPECT_EQ(s, ints({1, -2, -2, -4, -10, -28, -84}, 6));
  EXPECT_EQ(s * s, ints({1, -4}, 6));
}

TEST(Fps, CatalanQuotient) {
  auto c = gf(GfName::CATALAN_C, 10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(c[n], BigRational(static_cast<unsigned long>(catalan(n))));
}

TEST(Fps, DivisionAndErrors) {
  auto f = ints({3, 1, 4, 1, 5}, 4);
  EXPECT_EQ(f / f, Fps::constant(1, 4));
  EXPECT_EQ(inverse(ints({1, -1}, 5)), ints({1, 1, 1, 1, 1, 1}, 5));
  try {
    f / ints({0, 1}, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_unit_divisor);
  }
  try {
    sqrt(ints({4, 1}, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_sqrt_constant_term);
  }
  try {
    f + ints({1}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::order_mismatch);
  }
}

TEST(Fps, ShiftScaleCompose) {
  auto f = ints({1, 2, 3}, 3);
  EXPECT_EQ(shift(f, 1), ints({0, 1, 2, 3}, 3));
  EXPECT_EQ(shift(f, 2), ints({0, 0, 1, 2}, 3));
  EXPECT_EQ(scale(f, 2), ints({2, 4, 6}, 3));
  EXPECT_EQ(compose_scalar(f, q("1/2")), Fps::from({1, 1, q("3/4")}, 3));
  EXPECT_EQ(divide_by_x_power(ints({0, 5, 6}, 2), 1), ints({5, 6}, 1));
}

TEST(Fps, SqrtSquareRoundTripRandom) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 12;
    Fps f(order);
    f[0] = 1;
    for (int i = 1; i <= order; ++i) f[i] = BigRational(num(rng), den(rng));
    for (int i = 1; i <= order; ++i) f[i].canonicalize();
    auto g = sqrt(f);
    EXPECT_EQ(g * g, f) << trial;
  }
}

TEST(Gf, Examples) {
  auto s = gf(GfName::S_SYSTEM, 4);
  EXPECT_EQ(s, ints({1, 1, 2, 6, 21}, 4));
  EXPECT_EQ(gf(GfName::H_CLOSED, 4), ints({1, 1, 3, 10, 35}, 4));
  std::vector<BigRational> one{1};
  EXPECT_EQ(gf(GfName::D_AT, 5, one)[3], 5);
  EXPECT_THROW(gf(GfName::D_AT, 5), Error);
  EXPECT_EQ(parse_gf_name("gen_sava"), GfName::GEN_SAVA);
  EXPECT_THROW(parse_gf_name("zeta"), Error);
}

TEST(Gf, DAgreesWithBallotTable) {
  for (auto u : {q("1"), q("1/3"), q("-2/5")}) {
    std::vector<BigRational> p{u};
    EXPECT_EQ(gf(GfName::D_AT, 14, p), d_series(u, 14)) << to_string(u);
  }
}

TEST(Gf, GenSavaIdentities) {
  const int N = 24;
  auto g = gf(GfName::GEN_SAVA, N);
  for (int n = 1; n <= N; ++n) EXPECT_EQ(g[n], BigRational(static_cast<unsigned long>(formula_value(FormulaId::A279561, n)))) << n;
  auto one = Fps::constant(1, N);
  auto geo = one / (one - Fps::x(N));
  EXPECT_EQ(gf(GfName::CLOSED_110_102, N) + geo, g);
  EXPECT_EQ(gf(GfName::S_SYSTEM, N), g);
  EXPECT_EQ(gf(GfName::CLOSED_120_102, N), gf(GfName::CLOSED_110_102, N));
}

TEST(Gf, ClosedFormsMatchTriangles) {
  const int N = 24;
  auto a = a_triangle(N), b = b_triangle(N);
  auto ca = gf(GfName::CLOSED_110_102, N), cb = gf(GfName::CLOSED_120_102, N);
  for (int n = 1; n <= N; ++n) {
    EXPECT_EQ(ca[n], BigRational(static_cast<unsigned long>(a.total_positive(n)))) << n;
    EXPECT_EQ(cb[n], BigRational(static_cast<unsigned long>(b.total_positive(n)))) << n;
  }
  EXPECT_EQ(a_series(1, 1, N), ca);
}

TEST(Gf, SSystemMatchesBruteForce) {
  auto s = gf(GfName::S_SYSTEM, 10);
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(s[n], BigRational(static_cast<unsigned long>(count_avoiders(n, PatternSet::of({"021", "120"}))))) << n;
}

TEST(Series, BivariateExamples) {
  // uv^2 x^2 + (2uv^2 + uv^3 + 2u^2 v^3) x^3 at u = 2, v = 3
  auto a = a_series(2, 3, 3);
  EXPECT_EQ(a[2], 18);
  EXPECT_EQ(a[3], 36 + 54 + 216);
  EXPECT_EQ(b_series(2, 3, 3), a);
  // x + (1+u) x^2 + (1+u+uv+2u^2) x^3
  auto c = c_series(2, 3, 3);
  EXPECT_EQ(c, ints({0, 1, 3, 17}, 3));
  // uvx + (uv + u^2 v) x^2
  auto e = e_series(2, 3, 2);
  EXPECT_EQ(e, ints({0, 6, 18}, 2));
}

class Residual : public ::testing::TestWithParam<std::tuple<EquationId, const char*, const char*>> {};

TEST_P(Residual, IsZeroToOrder16) {
  auto [id, u, v] = GetParam();
  EXPECT_TRUE(residual(id, q(u), q(v), 16).is_zero()) << to_string(id) << " at " << u << "," << v;
}

INSTANTIATE_TEST_SUITE_P(
    Points, Residual,
    ::testing::Combine(::testing::Values(EquationId::FUN_110_102, EquationId::FUN_120_102, EquationId::FUNC_011_201,
                                         EquationId::EQ_SAV),
                       ::testing::Values("1/2", "2/7", "-3/4"), ::testing::Values("1/3", "1/5")));

TEST(Residual, PrintedCoefficientIsNotAnIdentity) {
  auto r = residual(EquationId::FUNC_011_201_PRINTED, q("1/3"), q("1/2"), 16);
  EXPECT_FALSE(r.is_zero());
  EXPECT_EQ(r[1], q("-4/3"));
}

TEST(Residual, SingularParameters) {
  auto code = [](EquationId id, const char* u, const char* v) {
    try {
      residual(id, q(u), q(v), 4);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  EXPECT_EQ(code(EquationId::FUN_110_102, "1", "1/2"), Errc::singular_parameter);
  EXPECT_EQ(code(EquationId::FUN_120_102, "2", "1/2"), Errc::singular_parameter);
  EXPECT_EQ(code(EquationId::FUNC_011_201, "1/2", "0"), Errc::singular_parameter);
  EXPECT_EQ(code(EquationId::EQ_SAV, "1/2", "1/2"), Errc::singular_parameter);
  EXPECT_EQ(parse_equation_id("eq_sav"), EquationId::EQ_SAV);
}
