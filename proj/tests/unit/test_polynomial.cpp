#include <doctest.h>

#include "oracles.hpp"
#include "simsun/numbers.hpp"
#include "simsun/polynomial.hpp"

using namespace simsun;

namespace {
const Polynomial X = Polynomial::variable(Var::x);
const Polynomial Q = Polynomial::variable(Var::q);
const Polynomial Y = Polynomial::variable(Var::y);
} // namespace

TEST_CASE("canonical text") {
  CHECK((1 + 11 * X + 4 * X * X).to_string() == "1 + 11*x + 4*x^2");
  CHECK(Polynomial().to_string() == "0");
  CHECK((X - 1).to_string() == "-1 + x");
}

TEST_CASE("ring axioms on sample polynomials") {
  const Polynomial a = 1 + 2 * X - Q * Y;
  const Polynomial b = Polynomial(Rational(3, 2)) * X * Q + Y;
  const Polynomial c = X * X * X - 5;
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK(a - a == Polynomial());
  CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("derivative, substitution and evaluation") {
  const Polynomial p = 1 + 26 * X + 34 * X * X;
  CHECK(p.derivative() == 26 + 68 * X);
  CHECK(p.eval_at(Var::x, 1) == Polynomial(61));
  CHECK(p.substitute(Var::x, 2 * X) == 1 + 52 * X + 136 * X * X);
  CHECK((X * Q + Y).evaluate_at_one() == 2);
  CHECK(p.coefficients() == std::vector<Rational>{1, 26, 34});
  CHECK(p.degree() == 2);
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("Stirling numbers of the second kind against set partitions") {
  CHECK(stirling2(4, 2) == 7);
  for (int n = 0; n <= 8; ++n)
    for (int i = 0; i <= n; ++i)
      CHECK(stirling2(n, i) == oracle::set_partitions(n, i));
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(pow2(70) == Integer("1180591620717411303424"));
}
