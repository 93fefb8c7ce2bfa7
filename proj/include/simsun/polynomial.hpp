#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace simsun {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : std::uint8_t { x = 0, q = 1, y = 2 };

char var_name(Var v);

/// Exponents of x, q, y in that order.
using Exponents = std::array<unsigned, 3>;

/// Graded order: total degree, then x-degree, then q-degree.
struct GradedLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in x, q, y with exact rational coefficients. Zero
/// coefficients are never stored, so structural equality is polynomial equality.
class Polynomial {
public:
  using Terms = std::map<Exponents, Rational, GradedLess>;

  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(const Integer& c) : Polynomial(Rational(c)) {}
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial variable(Var v);
  static Polynomial monomial(const Rational& c, Exponents e);

  /// Σ coeffs[k] v^k.
  static Polynomial from_coefficients(std::span<const Integer> coeffs, Var v = Var::x);
  static Polynomial from_coefficients(std::span<const Rational> coeffs, Var v = Var::x);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral() const;

  /// Highest exponent of `v`; -1 for the zero polynomial.
  int degree(Var v = Var::x) const;

  Rational coefficient(Exponents e) const;

  /// True when no variable other than `v` occurs.
  bool is_univariate_in(Var v) const;

  /// Coefficients in increasing powers of `v`; requires is_univariate_in(v).
  std::vector<Rational> coefficients(Var v = Var::x) const;

  /// As above, but every coefficient must be an integer.
  std::vector<Integer> integer_coefficients(Var v = Var::x) const;

  /// Coefficient of v^k as a polynomial in the remaining variables.
  Polynomial coefficient_of(Var v, unsigned k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  /// Multiplies every coefficient by `c`.
  Polynomial& scale(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;

  Polynomial pow(unsigned e) const;

  /// Formal partial derivative.
  Polynomial derivative(Var v = Var::x) const;

  /// Replaces `v` by the value `c`.
  Polynomial eval_at(Var v, const Rational& c) const;

  /// Replaces `v` by the polynomial `replacement`.
  Polynomial substitute(Var v, const Polynomial& replacement) const;

  /// Sum of all coefficients (evaluation at x = q = y = 1).
  Rational evaluate_at_one() const;

  /// Canonical text: "1 + 11*x + 4*x^2", terms in graded order.
  std::string to_string() const;

private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

/// x^k as a polynomial.
Polynomial x_pow(unsigned k);

} // namespace simsun
