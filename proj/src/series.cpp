#include "simsun/series.hpp"

#include <stdexcept>
#include <string>

#include "simsun/numbers.hpp"
#include "simsun/simsun.hpp"
#include "simsun/triangles.hpp"

namespace simsun {

// --- FormalSeries --------------------------------------------------------------

FormalSeries::FormalSeries(int order) : c_(static_cast<std::size_t>(order + 1)) {
  if (order < 0)
    throw std::invalid_argument("FormalSeries: negative order");
}

FormalSeries::FormalSeries(int order, std::vector<Polynomial> coeffs) : FormalSeries(order) {
  for (std::size_t n = 0; n < coeffs.size() && n < c_.size(); ++n)
    c_[n] = std::move(coeffs[n]);
}

FormalSeries FormalSeries::constant(int order, const Polynomial& c) {
  FormalSeries f(order);
  f.c_[0] = c;
  return f;
}

FormalSeries FormalSeries::linear(int order, const Polynomial& c) {
  FormalSeries f(order);
  if (order >= 1)
    f.c_[1] = c;
  return f;
}

Polynomial FormalSeries::egf_coeff(int n) const {
  Polynomial c = (*this)[n];
  c.scale(Rational(factorial(n)));
  return c;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  if (o.order() != order())
    throw std::invalid_argument("FormalSeries: order mismatch");
  for (std::size_t n = 0; n < c_.size(); ++n)
    c_[n] += o.c_[n];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  if (o.order() != order())
    throw std::invalid_argument("FormalSeries: order mismatch");
  for (std::size_t n = 0; n < c_.size(); ++n)
    c_[n] -= o.c_[n];
  return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("FormalSeries: order mismatch");
  FormalSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero())
      continue;
    for (int j = 0; i + j <= a.order(); ++j)
      if (!b[j].is_zero())
        out[i + j] += a[i] * b[j];
  }
  return out;
}

FormalSeries FormalSeries::operator-() const {
  return map([](const Polynomial& p) { return -p; });
}

FormalSeries FormalSeries::times(const Polynomial& c) const {
  return map([&](const Polynomial& p) { return p * c; });
}

FormalSeries FormalSeries::map(const std::function<Polynomial(const Polynomial&)>& f) const {
  FormalSeries out(order());
  for (std::size_t n = 0; n < c_.size(); ++n)
    out.c_[n] = f(c_[n]);
  return out;
}

FormalSeries FormalSeries::with_order(int order) const {
  FormalSeries out(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n)
    out[n] = (*this)[n];
  return out;
}

// --- series functions ----------------------------------------------------------

FormalSeries inverse(const FormalSeries& f) {
  if (!f[0].is_constant() || f[0].is_zero())
    throw std::domain_error("inverse: constant term must be a nonzero constant");
  const Rational c0 = f[0].coefficient({0, 0, 0});
  const Rational inv0 = 1 / c0;
  FormalSeries g(f.order());
  g[0] = Polynomial(inv0);
  for (int n = 1; n <= f.order(); ++n) {
    Polynomial acc;
    for (int k = 1; k <= n; ++k)
      if (!f[k].is_zero())
        acc += f[k] * g[n - k];
    g[n] = acc.scale(-inv0);
  }
  return g;
}

FormalSeries log(const FormalSeries& f) {
  if (f[0] != Polynomial(1))
    throw std::domain_error("log: constant term must be 1");
  FormalSeries g(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    Polynomial acc;
    for (int k = 1; k < n; ++k)
      if (!g[k].is_zero() && !f[n - k].is_zero())
        acc += (g[k] * f[n - k]).scale(Rational(k));
    g[n] = f[n] - acc.scale(Rational(1) / n);
  }
  return g;
}

FormalSeries exp(const FormalSeries& f) {
  if (!f[0].is_zero())
    throw std::domain_error("exp: constant term must be 0");
  FormalSeries g(f.order());
  g[0] = Polynomial(1);
  for (int n = 1; n <= f.order(); ++n) {
    Polynomial acc;
    for (int k = 1; k <= n; ++k)
      if (!f[k].is_zero())
        acc += (f[k] * g[n - k]).scale(Rational(k));
    g[n] = acc.scale(Rational(1) / n);
  }
  return g;
}

FormalSeries pow_int(const FormalSeries& f, int e) {
  FormalSeries base = e < 0 ? inverse(f) : f;
  unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
  FormalSeries out = FormalSeries::constant(f.order(), Polynomial(1));
  while (k > 0) {
    if (k & 1U)
      out = out * base;
    k >>= 1U;
    if (k > 0)
      base = base * base;
  }
  return out;
}

FormalSeries pow_poly(const FormalSeries& f, const Polynomial& a) { return exp(log(f).times(a)); }

FormalSeries derivative_z(const FormalSeries& f) {
  FormalSeries out(std::max(f.order() - 1, 0));
  for (int n = 1; n <= f.order(); ++n) {
    Polynomial c = f[n];
    out[n - 1] = c.scale(Rational(n));
  }
  return out;
}

FormalSeries scale_z(const FormalSeries& f, const Rational& c) {
  FormalSeries out(f.order());
  Rational power = 1;
  for (int n = 0; n <= f.order(); ++n) {
    Polynomial t = f[n];
    out[n] = t.scale(power);
    power *= c;
  }
  return out;
}

FormalSeries derivative(const FormalSeries& f, Var v) {
  return f.map([v](const Polynomial& p) { return p.derivative(v); });
}

FormalSeries substitute(const FormalSeries& f, Var v, const Polynomial& replacement) {
  return f.map([&](const Polynomial& p) { return p.substitute(v, replacement); });
}

// --- builders ------------------------------------------------------------------

namespace {

const Polynomial kX = Polynomial::variable(Var::x);
const Polynomial kQ = Polynomial::variable(Var::q);
const Polynomial kY = Polynomial::variable(Var::y);

/// Σ t^j z^{2j}/(2j)!, the cosine of z√(-t) written without the radical.
FormalSeries even_part(const Polynomial& t, int order) {
  FormalSeries f(order);
  Polynomial power(1);
  for (int n = 0; n <= order; n += 2) {
    Polynomial c = power;
    f[n] = c.scale(Rational(1) / Rational(factorial(n)));
    power *= t;
  }
  return f;
}

/// Σ t^j z^{2j+1}/(2j+1)!.
FormalSeries odd_part(const Polynomial& t, int order) {
  FormalSeries f(order);
  Polynomial power(1);
  for (int n = 1; n <= order; n += 2) {
    Polynomial c = power;
    f[n] = c.scale(Rational(1) / Rational(factorial(n)));
    power *= t;
  }
  return f;
}

FormalSeries build_sxz(int order) {
  // u = z√a/2 with a = 2x-1, so cos u and sin(u)/√a expand in (1-2x)/4.
  const Polynomial t = (1 - 2 * kX).scale(Rational(1) / 4);
  const FormalSeries odd = odd_part(t, order).map([](const Polynomial& p) {
    Polynomial h = p;
    return h.scale(Rational(1) / 2);
  });
  return pow_int(inverse(even_part(t, order) - odd), 2);
}

FormalSeries build_what(int order) {
  const Polynomial b = 1 - kX;
  return inverse(even_part(b, order) - odd_part(b, order));
}

FormalSeries build_springer(int order) {
  const Polynomial minus_one(-1);
  return inverse(even_part(minus_one, order) - odd_part(minus_one, order));
}

} // namespace

FormalSeries build_series(std::string_view name, int order) {
  if (order < 0 || order > kMaxSeriesOrder)
    throw std::invalid_argument("series order must lie in [0, " + std::to_string(kMaxSeriesOrder) + "]");
  if (name == "Sxz")
    return build_sxz(order);
  if (name == "What")
    return build_what(order);
  if (name == "Sxz-from-What")
    return pow_int(scale_z(substitute(build_what(order), Var::x, 2 * kX), Rational(1) / 2), 2);
  if (name == "springer")
    return build_springer(order);
  if (name == "Sxqz")
    return pow_poly(build_sxz(order), kQ);
  if (name == "one-minus-sin-negq") {
    const FormalSeries one_minus_sin =
        FormalSeries::constant(order, Polynomial(1)) - odd_part(Polynomial(-1), order);
    return pow_poly(one_minus_sin, -kQ);
  }
  if (name == "trivariate")
    return exp(FormalSeries::linear(order, kQ * (kY - 1))) * pow_poly(build_sxz(order), kQ);
  throw std::invalid_argument("unknown series: " + std::string(name));
}

// --- identities ----------------------------------------------------------------

namespace {

struct SeriesIdInfo {
  std::string_view id;
  int default_order;
  int max_order;
};

constexpr SeriesIdInfo kSeriesInfo[] = {
    {"S-eq-What-squared", 12, kMaxSeriesOrder}, {"coeff-match-Sxz", 12, kMaxSeriesOrder},
    {"coeff-match-What", 12, kMaxSeriesOrder},  {"coeff-match-Sxq", 10, kMaxSeriesOrder},
    {"pde21", 10, kMaxSeriesOrder - 1},             {"cud", 9, 9},
    {"one-minus-sin", 9, 9},                    {"springer", 8, 9},
    {"trivar-egf", 9, kMaxSeriesOrder},         {"pow-int-q", 10, kMaxSeriesOrder},
};

const SeriesIdInfo& info(std::string_view id) {
  for (const auto& i : kSeriesInfo)
    if (i.id == id)
      return i;
  throw std::invalid_argument("unknown series identity: " + std::string(id));
}

std::optional<std::string> mismatch(const Polynomial& got, const Polynomial& want) {
  if (got == want)
    return std::nullopt;
  return got.to_string() + " != " + want.to_string();
}

/// Compares n!·[z^n] of a series against row n of a triangle.
IdentityReport match_triangle(std::string_view id, const FormalSeries& f, Family family, int n_min) {
  const Triangle t = triangle(family, f.order());
  return check_range(std::string(id), n_min, f.order(),
                     [&](int n) { return mismatch(f.egf_coeff(n), t.row(n)); });
}

IdentityReport match_class(std::string_view id, const FormalSeries& f, PermClass cls, int n_max) {
  const Stat cyc[] = {Stat::cyc};
  return check_range(std::string(id), 1, n_max,
                     [&](int n) { return mismatch(f.egf_coeff(n), distribution(cls, cyc, n)); });
}

} // namespace

int default_series_order(std::string_view id) { return info(id).default_order; }

int max_series_order(std::string_view id) { return info(id).max_order; }

IdentityReport verify_series(std::string_view id, int order) {
  const SeriesIdInfo& meta = info(id);
  if (order < 0 || order > meta.max_order)
    throw std::invalid_argument(std::string(id) + ": order must lie in [0, " + std::to_string(meta.max_order) + "]");

  if (id == "S-eq-What-squared") {
    const FormalSeries a = build_series("Sxz", order), b = build_series("Sxz-from-What", order);
    return check_range(std::string(id), 0, order, [&](int n) { return mismatch(a[n], b[n]); });
  }
  if (id == "coeff-match-Sxz")
    return match_triangle(id, build_series("Sxz", order), Family::S, 0);
  if (id == "coeff-match-What")
    return match_triangle(id, build_series("What", order), Family::What, 0);
  if (id == "coeff-match-Sxq")
    return match_triangle(id, build_series("Sxqz", order), Family::Sxq, 0);
  if (id == "trivar-egf")
    return match_triangle(id, build_series("trivariate", order), Family::Sxyq, 0);
  if (id == "pde21") {
    // (1 - xz) S_z = qS + x(1-2x) S_x on the terms z^0..z^order; S is built one order higher.
    const FormalSeries s = build_series("Sxqz", order + 1);
    const FormalSeries sz = derivative_z(s);
    const FormalSeries lhs = sz - (FormalSeries::linear(order, kX) * sz);
    const FormalSeries rhs = (s.times(kQ) + derivative(s, Var::x).times(kX * (1 - 2 * kX))).with_order(order);
    return check_range(std::string(id), 0, order, [&](int n) { return mismatch(lhs[n], rhs[n]); });
  }
  if (id == "cud")
    return match_class(id, substitute(build_series("Sxqz", order), Var::x, Polynomial(1)), PermClass::CUD, order);
  if (id == "one-minus-sin")
    return match_class(id, build_series("one-minus-sin-negq", order), PermClass::SS, order);
  if (id == "springer") {
    const FormalSeries f = build_series("springer", order);
    return check_range(std::string(id), 1, order, [&](int n) {
      return mismatch(f.egf_coeff(n), Polynomial(class_size(PermClass::Snake, n)));
    });
  }
  // pow-int-q: S^q at q = 1..4 agrees with repeated multiplication.
  const FormalSeries sq = build_series("Sxqz", order);
  const FormalSeries s = build_series("Sxz", order);
  std::vector<FormalSeries> specialised, powers;
  for (int k = 1; k <= 4; ++k) {
    specialised.push_back(sq.map([k](const Polynomial& p) { return p.eval_at(Var::q, Rational(k)); }));
    powers.push_back(pow_int(s, k));
  }
  return check_range(std::string(id), 0, order, [&](int n) -> std::optional<std::string> {
    for (std::size_t k = 0; k < powers.size(); ++k)
      if (auto fail = mismatch(specialised[k][n], powers[k][n]))
        return "q=" + std::to_string(k + 1) + ", " + *fail;
    return std::nullopt;
  });
}

} // namespace simsun
