#include <doctest.h>

#include "simsun/series.hpp"
#include "simsun/triangles.hpp"

using namespace simsun;

namespace {
const Polynomial X = Polynomial::variable(Var::x);

FormalSeries sample(int order, int seed) {
  std::vector<Polynomial> c;
  for (int n = 0; n <= order; ++n)
    c.push_back(Polynomial(n == 0 ? 1 : seed * n - 3) + Polynomial(n % 3) * X);
  return FormalSeries(order, c);
}
} // namespace

TEST_CASE("series ring axioms") {
  const FormalSeries a = sample(8, 2), b = sample(8, 5), c = sample(8, -1);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * b == b * a);
  CHECK(a * inverse(a) == FormalSeries::constant(8, 1));
  CHECK(exp(log(a)) == a);
  CHECK(pow_int(a, 3) == a * a * a);
  CHECK(pow_int(a, -2) * a * a == FormalSeries::constant(8, 1));
  CHECK(pow_poly(a, Polynomial(2)) == a * a);
}

TEST_CASE("exp of z has unit EGF coefficients") {
  const FormalSeries e = exp(FormalSeries::linear(10, 1));
  for (int n = 0; n <= 10; ++n)
    CHECK(e.egf_coeff(n) == Polynomial(1));
}

TEST_CASE("Springer numbers") {
  const FormalSeries s = build_series("springer", 6);
  const long want[] = {1, 1, 3, 11, 57, 361, 2763};
  for (int n = 0; n <= 6; ++n)
    CHECK(s.egf_coeff(n) == Polynomial(want[n]));
}

TEST_CASE("Sxz builder reproduces the S triangle") {
  const FormalSeries s = build_series("Sxz", 10);
  const Triangle t = triangle(Family::S, 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(s.egf_coeff(n) == t.row(n));
  CHECK(build_series("Sxz-from-What", 10) == s);
}

TEST_CASE("builder argument validation") {
  CHECK_THROWS_AS(build_series("nope", 4), std::invalid_argument);
  CHECK_THROWS_AS(build_series("Sxz", kMaxSeriesOrder + 1), std::invalid_argument);
}

TEST_CASE("series identities at small orders") {
  for (std::string_view id : kSeriesIds)
    CHECK(verify_series(id, std::min(6, max_series_order(id))).passed());
}
