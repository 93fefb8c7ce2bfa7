#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "simsun/polynomial.hpp"
#include "simsun/report.hpp"

namespace simsun {

inline constexpr int kDefaultSeriesOrder = 16;
inline constexpr int kMaxSeriesOrder = 16;

/// Σ_{n<=N} c_n z^n with polynomial coefficients; arithmetic is exact mod z^{N+1}.
class FormalSeries {
public:
  FormalSeries() = default;
  /// The zero series truncated at `order`.
  explicit FormalSeries(int order);
  FormalSeries(int order, std::vector<Polynomial> coeffs);

  /// The constant series c.
  static FormalSeries constant(int order, const Polynomial& c);
  /// c·z.
  static FormalSeries linear(int order, const Polynomial& c);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Polynomial& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Polynomial& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<Polynomial>& coeffs() const { return c_; }

  /// n!·c_n.
  Polynomial egf_coeff(int n) const;

  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  FormalSeries operator-() const;

  bool operator==(const FormalSeries&) const = default;

  /// Multiplies every coefficient by the polynomial c.
  FormalSeries times(const Polynomial& c) const;

  /// Applies f to every coefficient.
  FormalSeries map(const std::function<Polynomial(const Polynomial&)>& f) const;

  /// Truncates (or zero-extends) to a new order.
  FormalSeries with_order(int order) const;

private:
  std::vector<Polynomial> c_;
};

/// Requires a nonzero constant c_0.
FormalSeries inverse(const FormalSeries& f);
/// Requires c_0 = 1.
FormalSeries log(const FormalSeries& f);
/// Requires c_0 = 0.
FormalSeries exp(const FormalSeries& f);
/// Negative exponents need an invertible constant term.
FormalSeries pow_int(const FormalSeries& f, int e);
/// exp(a·log f) for a polynomial exponent a; requires c_0 = 1.
FormalSeries pow_poly(const FormalSeries& f, const Polynomial& a);
/// d/dz; the order drops by one.
FormalSeries derivative_z(const FormalSeries& f);
/// z -> c·z.
FormalSeries scale_z(const FormalSeries& f, const Rational& c);
/// Partial derivative of every coefficient.
FormalSeries derivative(const FormalSeries& f, Var v);
/// Replaces v by `replacement` in every coefficient.
FormalSeries substitute(const FormalSeries& f, Var v, const Polynomial& replacement);

inline constexpr std::string_view kSeriesNames[] = {"Sxz",     "What",    "Sxz-from-What", "springer",
                                                   "Sxqz",    "one-minus-sin-negq", "trivariate"};

/// Throws std::invalid_argument for an unknown name or order outside [0, kMaxSeriesOrder].
FormalSeries build_series(std::string_view name, int order = kDefaultSeriesOrder);

inline constexpr std::string_view kSeriesIds[] = {
    "S-eq-What-squared", "coeff-match-Sxz", "coeff-match-What", "coeff-match-Sxq", "pde21",
    "cud",               "one-minus-sin",   "springer",         "trivar-egf",      "pow-int-q"};

int default_series_order(std::string_view id);
int max_series_order(std::string_view id);

/// Throws std::invalid_argument for an unknown id or an order beyond the id's bound.
IdentityReport verify_series(std::string_view id, int order);

} // namespace simsun
