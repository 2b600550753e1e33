#include "invseq/series.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "invseq/closed_forms.hpp"
#include "invseq/recurrences.hpp"

namespace invseq {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(Errc::parse_error, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view d) {
    if (!d.empty() && d.front() == '-') d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || (slash != std::string::npos && den.front() == '-'))
    throw Error(Errc::parse_error, "bad rational: " + std::string(text));
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(Errc::parse_error, "zero denominator: " + std::string(text));
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

// Fps

Fps::Fps(int order) : c_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

Fps Fps::constant(const BigRational& c, int order) {
  Fps f(order);
  f[0] = c;
  return f;
}

Fps Fps::x(int order) {
  Fps f(order);
  if (order >= 1) f[1] = 1;
  return f;
}

Fps Fps::from(std::vector<BigRational> coefficients, int order) {
  Fps f(order);
  for (int i = 0; i <= order && i < static_cast<int>(coefficients.size()); ++i) f[i] = coefficients[static_cast<std::size_t>(i)];
  return f;
}

bool Fps::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigRational& q) { return q == 0; });
}

void Fps::check_order(const Fps& g) const {
  if (order() != g.order())
    throw Error(Errc::order_mismatch,
                "order " + std::to_string(order()) + " vs " + std::to_string(g.order()));
}

Fps Fps::operator-() const {
  Fps r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

Fps& Fps::operator+=(const Fps& g) {
  check_order(g);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += g.c_[i];
  return *this;
}

Fps& Fps::operator-=(const Fps& g) {
  check_order(g);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= g.c_[i];
  return *this;
}

Fps& Fps::operator*=(const Fps& g) {
  check_order(g);
  const int n = order();
  std::vector<BigRational> r(c_.size());
  for (int i = 0; i <= n; ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * g[j];
  }
  c_ = std::move(r);
  return *this;
}

Fps& Fps::operator*=(const BigRational& c) {
  for (auto& q : c_) q *= c;
  return *this;
}

Fps& Fps::operator/=(const Fps& g) {
  check_order(g);
  if (g[0] == 0) throw Error(Errc::non_unit_divisor, "divisor has zero constant term");
  const int n = order();
  std::vector<BigRational> r(c_.size());
  for (int i = 0; i <= n; ++i) {
    BigRational acc = c_[static_cast<std::size_t>(i)];
    for (int j = 1; j <= i; ++j) acc -= g[j] * r[static_cast<std::size_t>(i - j)];
    r[static_cast<std::size_t>(i)] = acc / g[0];
  }
  c_ = std::move(r);
  return *this;
}

Fps sqrt(const Fps& f) {
  if (f[0] != 1) throw Error(Errc::bad_sqrt_constant_term, "sqrt needs constant term 1, got " + to_string(f[0]));
  const int n = f.order();
  Fps g(n);
  g[0] = 1;
  for (int i = 1; i <= n; ++i) {
    BigRational acc = f[i];
    for (int k = 1; k < i; ++k) acc -= g[k] * g[i - k];
    g[i] = acc / 2;
  }
  return g;
}

Fps inverse(const Fps& f) { return Fps::constant(1, f.order()) / f; }

Fps scale(const Fps& f, const BigRational& c) { return f * c; }

Fps shift(const Fps& f, int k) {
  Fps r(f.order());
  for (int i = 0; i <= f.order(); ++i) {
    int j = i + k;
    if (j >= 0 && j <= f.order()) r[j] = f[i];
  }
  return r;
}

Fps compose_scalar(const Fps& f, const BigRational& c) {
  Fps r(f.order());
  BigRational p = 1;
  for (int i = 0; i <= f.order(); ++i) {
    r[i] = f[i] * p;
    p *= c;
  }
  return r;
}

Fps divide_by_x_power(const Fps& f, int k) {
  Fps r(f.order() - k);
  for (int i = k; i <= f.order(); ++i) r[i - k] = f[i];
  return r;
}

// Catalog

namespace {

std::string upper(std::string_view s) {
  std::string r(s);
  for (auto& c : r) c = static_cast<char>(c == '-' ? '_' : std::toupper(static_cast<unsigned char>(c)));
  return r;
}

Fps poly(std::initializer_list<long> coeffs, int order) {
  Fps f(order);
  int i = 0;
  for (long c : coeffs) {
    if (i <= order) f[i] = c;
    ++i;
  }
  return f;
}

Fps catalan_c(int order) {
  Fps s = sqrt(poly({1, -4}, order + 1));
  Fps top = Fps::constant(1, order + 1) - s;
  return divide_by_x_power(top, 1) * BigRational(1, 2);
}

Fps d_at(const BigRational& u, int order) {
  Fps s = sqrt(Fps::constant(1, order) - Fps::x(order) * (4 * u));
  Fps den = poly({1, -2}, order) + s;
  return Fps::x(order) * BigRational(2) / den;
}

Fps h_closed(int order) {
  Fps xc = Fps::x(order) * catalan_c(order);
  return (Fps::constant(1, order) - xc) / (Fps::constant(1, order) - xc * BigRational(2));
}

Fps closed_110_102(int order) {
  Fps s = sqrt(poly({1, -4}, order));
  Fps x2 = shift(Fps::constant(1, order), 2);
  Fps num = x2 + x2 * s;
  Fps den = poly({-1, 1}, order) * (poly({-1, 3}, order) * s + poly({-1, 5, -4}, order));
  return num / den;
}

}  // namespace

GfName parse_gf_name(std::string_view name) {
  const std::string u = upper(name);
  for (GfName g : {GfName::CATALAN_C, GfName::D_AT, GfName::GEN_SAVA, GfName::S_SYSTEM, GfName::H_CLOSED,
                   GfName::CLOSED_110_102, GfName::CLOSED_120_102})
    if (to_string(g) == u) return g;
  throw Error(Errc::unknown_name, "unknown generating function: " + std::string(name));
}

std::string_view to_string(GfName name) {
  switch (name) {
    case GfName::CATALAN_C: return "CATALAN_C";
    case GfName::D_AT: return "D_AT";
    case GfName::GEN_SAVA: return "GEN_SAVA";
    case GfName::S_SYSTEM: return "S_SYSTEM";
    case GfName::H_CLOSED: return "H_CLOSED";
    case GfName::CLOSED_110_102: return "CLOSED_110_102";
    case GfName::CLOSED_120_102: return "CLOSED_120_102";
  }
  return "?";
}

Fps gf(GfName name, int order, std::span<const BigRational> params) {
  if (order < 1) throw Error(Errc::out_of_range, "order must be at least 1");
  switch (name) {
    case GfName::CATALAN_C:
      return catalan_c(order);
    case GfName::D_AT:
      if (params.empty()) throw Error(Errc::parse_error, "D_AT needs the parameter u");
      return d_at(params[0], order);
    case GfName::GEN_SAVA: {
      Fps s = sqrt(poly({1, -8, 20, -16}, order));
      Fps num = poly({1, -4}, order) + s;
      Fps den = poly({-1, 1}, order) * poly({-1, 4}, order) * BigRational(2);
      return num / den;
    }
    case GfName::S_SYSTEM: {
      const Fps one = Fps::constant(1, order);
      const Fps x = Fps::x(order);
      const Fps c = catalan_c(order);
      const Fps h = h_closed(order);
      const Fps geo = one / (one - x);
      // S (1 - xC) = 1 + xH/(1-x) - xC/(1-x)
      return (one + x * (h - c) * geo) / (one - x * c);
    }
    case GfName::H_CLOSED:
      return h_closed(order);
    case GfName::CLOSED_110_102:
    case GfName::CLOSED_120_102:
      return closed_110_102(order);
  }
  throw Error(Errc::unknown_name, "unknown generating function");
}

// Series from the refined counts

namespace {

std::vector<BigRational> powers(const BigRational& base, int k) {
  std::vector<BigRational> p(static_cast<std::size_t>(k) + 1);
  p[0] = 1;
  for (int i = 1; i <= k; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * base;
  return p;
}

BigRational big(count_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return BigRational(z);
}

Fps positive_series(const IndexedTriangle& t, const BigRational& u, const BigRational& v, int order) {
  const auto pu = powers(u, order);
  const auto pv = powers(v, order);
  Fps f(order);
  for (int n = 1; n <= order; ++n)
    t.for_each_cell(n, [&](int m, int l, count_t val) {
      if (m >= 1 && val != 0) f[n] += big(val) * pu[static_cast<std::size_t>(m)] * pv[static_cast<std::size_t>(l)];
    });
  return f;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::singular_parameter, what);
}

}  // namespace

Fps a_series(const BigRational& u, const BigRational& v, int order) {
  return positive_series(a_triangle(order), u, v, order);
}

Fps b_series(const BigRational& u, const BigRational& v, int order) {
  return positive_series(b_triangle(order), u, v, order);
}

Fps c_series(const BigRational& u, const BigRational& v, int order) {
  const auto t = c_triangle(order);
  const auto pu = powers(u, order);
  const auto pv = powers(v, order);
  Fps f(order);
  for (int n = 1; n <= order; ++n)
    t.for_each_cell(n, [&](int m, int l, count_t val) {
      if (val != 0) f[n] += big(val) * pu[static_cast<std::size_t>(m)] * pv[static_cast<std::size_t>(l - m - 1)];
    });
  return f;
}

Fps e_series(const BigRational& u, const BigRational& v, int order) {
  const auto levels = gentree_levels(order);
  const auto pu = powers(u, order + 1);
  const auto pv = powers(v, order + 1);
  Fps f(order);
  for (int n = 1; n <= order; ++n)
    for (const auto& [label, mult] : levels[static_cast<std::size_t>(n - 1)].labels)
      f[n] += big(mult) * pu[static_cast<std::size_t>(label.first)] * pv[static_cast<std::size_t>(label.second)];
  return f;
}

Fps d_series(const BigRational& u, int order) {
  const auto d = dyck_last(order);
  const auto pu = powers(u, order);
  Fps f(order);
  for (int n = 1; n <= order; ++n)
    for (int m = 0; m < n; ++m) f[n] += big(d.value(n, m)) * pu[static_cast<std::size_t>(m)];
  return f;
}

// Residuals

EquationId parse_equation_id(std::string_view name) {
  const std::string u = upper(name);
  for (EquationId e : {EquationId::FUN_110_102, EquationId::FUN_120_102, EquationId::FUNC_011_201,
                       EquationId::FUNC_011_201_PRINTED, EquationId::EQ_SAV})
    if (to_string(e) == u) return e;
  throw Error(Errc::unknown_name, "unknown equation: " + std::string(name));
}

std::string_view to_string(EquationId id) {
  switch (id) {
    case EquationId::FUN_110_102: return "FUN_110_102";
    case EquationId::FUN_120_102: return "FUN_120_102";
    case EquationId::FUNC_011_201: return "FUNC_011_201";
    case EquationId::FUNC_011_201_PRINTED: return "FUNC_011_201_PRINTED";
    case EquationId::EQ_SAV: return "EQ_SAV";
  }
  return "?";
}

Fps residual(EquationId id, const BigRational& u, const BigRational& v, int order) {
  if (order < 1) throw Error(Errc::out_of_range, "order must be at least 1");
  const Fps one = Fps::constant(1, order);
  const Fps x = Fps::x(order);
  const BigRational uv = u * v;
  switch (id) {
    case EquationId::FUN_110_102: {
      require(u != 1 && v != 1 && uv != 1, "FUN_110_102 needs u != 1, v != 1, uv != 1");
      const Fps lhs = a_series(u, v, order);
      Fps rhs = shift(one, 2) * v / (x - one);
      rhs += x * (v / (1 - v)) * d_at(uv, order);
      rhs += (x * (uv - v) / (one - x) - x * (v * v / (1 - v))) * compose_scalar(d_at(u, order), v);
      rhs += x * (u * v * v / ((1 - v) * (1 - uv))) * a_series(uv, 1, order);
      rhs += x * (u * u * v * v / ((1 - u) * (1 - uv))) * a_series(1, uv, order);
      rhs -= x * (u * v * v / ((1 - u) * (1 - v))) * lhs;
      return lhs - rhs;
    }
    case EquationId::FUN_120_102: {
      require(u != 1 && v != 1 && uv != 1, "FUN_120_102 needs u != 1, v != 1, uv != 1");
      const Fps lhs = b_series(u, v, order);
      const Fps vx = x * v;
      Fps rhs = (compose_scalar(d_at(u, order), v) - vx - vx * compose_scalar(d_at(1, order), uv)) * u / (one - x);
      rhs += x * (v / ((1 - v) * (1 - uv))) * b_series(uv, 1, order);
      rhs -= x * (v / ((1 - u) * (1 - v))) * lhs;
      rhs += x * (uv / ((1 - u) * (1 - uv))) * b_series(1, uv, order);
      return lhs - rhs;
    }
    case EquationId::FUNC_011_201:
    case EquationId::FUNC_011_201_PRINTED: {
      require(v != 0 && v != 1, "FUNC_011_201 needs v != 0, v != 1");
      const Fps c = c_series(u, v, order);
      const Fps c0 = c_series(u, 0, order);
      const Fps lhs = (one - x * (u / (v * (1 - v))) - u / v) * c;
      Fps rhs = x / (one - x) - x * (u / (1 - v)) * compose_scalar(c_series(u / v, 1, order), v);
      if (id == EquationId::FUNC_011_201)
        rhs -= (one + x) * (u / v) * c0;
      else
        rhs += (one - x) * (u / v) * c0;
      return lhs - rhs;
    }
    case EquationId::EQ_SAV: {
      require(v != 1 && u != v, "EQ_SAV needs v != 1, u != v");
      const Fps e = e_series(u, v, order);
      const Fps eu1 = e_series(u, 1, order);
      const Fps ev1 = e_series(v, 1, order);
      const BigRational k1 = uv / (1 - v);
      const BigRational k2 = uv / (u - v);
      const Fps lhs = (one + x * k1) * e;
      Fps rhs = x * uv + x * (k1 + k2) * eu1 - x * k2 * ev1;
      return lhs - rhs;
    }
  }
  throw Error(Errc::unknown_name, "unknown equation");
}

}  // namespace invseq
