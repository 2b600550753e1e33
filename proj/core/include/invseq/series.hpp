#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/error.hpp"

namespace invseq {

using BigRational = mpq_class;

BigRational parse_rational(std::string_view text);  // "3", "-1/2"
std::string to_string(const BigRational& q);

// Truncated power series: coefficients of x^0..x^order, all exact.
class Fps {
 public:
  explicit Fps(int order = 0);
  static Fps constant(const BigRational& c, int order);
  static Fps x(int order);
  static Fps from(std::vector<BigRational> coefficients, int order);  // pads or truncates

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const BigRational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  BigRational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<BigRational>& coefficients() const noexcept { return c_; }
  bool is_zero() const;

  Fps operator-() const;
  Fps& operator+=(const Fps& g);
  Fps& operator-=(const Fps& g);
  Fps& operator*=(const Fps& g);
  Fps& operator/=(const Fps& g);
  Fps& operator*=(const BigRational& c);

  friend Fps operator+(Fps f, const Fps& g) { return f += g; }
  friend Fps operator-(Fps f, const Fps& g) { return f -= g; }
  friend Fps operator*(Fps f, const Fps& g) { return f *= g; }
  friend Fps operator/(Fps f, const Fps& g) { return f /= g; }
  friend Fps operator*(Fps f, const BigRational& c) { return f *= c; }
  friend Fps operator*(const BigRational& c, Fps f) { return f *= c; }
  friend Fps operator+(Fps f, const BigRational& c) {
    f[0] += c;
    return f;
  }
  friend Fps operator-(Fps f, const BigRational& c) {
    f[0] -= c;
    return f;
  }
  friend Fps operator+(const BigRational& c, Fps f) { return f + c; }
  friend Fps operator-(const BigRational& c, const Fps& f) { return (-f) + c; }

  friend bool operator==(const Fps& f, const Fps& g) { return f.c_ == g.c_; }

 private:
  void check_order(const Fps& g) const;
  std::vector<BigRational> c_;
};

Fps sqrt(const Fps& f);                                // needs f[0] == 1
Fps inverse(const Fps& f);                             // needs f[0] != 0
Fps scale(const Fps& f, const BigRational& c);         // c * f
Fps shift(const Fps& f, int k);                        // x^k * f, truncated
Fps compose_scalar(const Fps& f, const BigRational& c);  // f(c x)
// Drops the x^0..x^{k-1} terms and divides by x^k; the result has order f.order() - k.
Fps divide_by_x_power(const Fps& f, int k);

enum class GfName {
  CATALAN_C,       // (1 - sqrt(1-4x)) / (2x)
  D_AT,            // 2x / (1 - 2x + sqrt(1-4ux)), params = {u}
  GEN_SAVA,        // (1 - 4x + sqrt(1-8x+20x^2-16x^3)) / (2(x-1)(4x-1))
  S_SYSTEM,        // S from H and C via S = (1 + x(H-C)/(1-x)) / (1 - xC)
  H_CLOSED,        // (1 - xC) / (1 - 2xC)
  CLOSED_110_102,  // (x^2 + x^2 sqrt(1-4x)) / ((x-1)((3x-1)sqrt(1-4x) - 4x^2 + 5x - 1))
  CLOSED_120_102,  // same closed form
};

GfName parse_gf_name(std::string_view name);
std::string_view to_string(GfName name);
Fps gf(GfName name, int order, std::span<const BigRational> params = {});

enum class EquationId {
  FUN_110_102,
  FUN_120_102,
  FUNC_011_201,
  FUNC_011_201_PRINTED,  // the C(x;u,0) coefficient as typeset, +u(1-x)/v; not an identity
  EQ_SAV,
};

EquationId parse_equation_id(std::string_view name);
std::string_view to_string(EquationId id);
// Left side minus right side at the rational point (u, v).
Fps residual(EquationId id, const BigRational& u, const BigRational& v, int order);

// The bivariate series evaluated at a point, built from the recurrences module.
Fps a_series(const BigRational& u, const BigRational& v, int order);  // sum a_{n,m,l} u^m v^l x^n, m >= 1
Fps b_series(const BigRational& u, const BigRational& v, int order);
Fps c_series(const BigRational& u, const BigRational& v, int order);  // sum c_{n,m,l} u^m v^{l-m-1} x^n
Fps e_series(const BigRational& u, const BigRational& v, int order);  // sum over tree labels x^n u^p v^q
// D(u, x) by summing d_{n,m} u^m x^n directly.
Fps d_series(const BigRational& u, int order);

}  // namespace invseq
