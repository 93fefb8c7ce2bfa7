#include <doctest.h>

#include "oracles.hpp"
#include "simsun/numbers.hpp"
#include "simsun/triangles.hpp"

using namespace simsun;

namespace {

Polynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c)
    v.emplace_back(x);
  return Polynomial::from_coefficients(std::span<const Integer>(v));
}

Polynomial from_histogram(const std::map<int, long>& h) {
  Polynomial p;
  for (const auto& [k, c] : h)
    p += Polynomial(c) * x_pow(static_cast<unsigned>(k));
  return p;
}

int uprun(const std::vector<int>& w) {
  std::vector<int> z{0};
  z.insert(z.end(), w.begin(), w.end());
  return oracle::altruns(z);
}

auto all = [](const std::vector<int>&) { return true; };

} // namespace

TEST_CASE("paper-literal rows") {
  const Triangle s = triangle(Family::S, 5);
  CHECK(s.row(1) == poly({1}));
  CHECK(s.row(2) == poly({1, 1}));
  CHECK(s.row(3) == poly({1, 4}));
  CHECK(s.row(4) == poly({1, 11, 4}));
  CHECK(s.row(5) == poly({1, 26, 34}));
  const Triangle p = triangle(Family::P, 5);
  CHECK(p.row(1) == poly({1}));
  CHECK(p.row(3) == poly({3, 2}));
  CHECK(p.row(5) == poly({5, 44, 12}));
  CHECK(triangle(Family::Pplus, 5).row(5) == poly({4, 22}));
  CHECK(triangle(Family::Pminus, 5).row(5) == poly({1, 22, 12}));
  CHECK(triangle(Family::T, 4).row(4) == poly({0, 1, 3, 8, 4}));
  CHECK(triangle(Family::W, 3).row(3) == poly({4, 2}));
  const Triangle what = triangle(Family::What, 1);
  CHECK(what.row(0) == poly({1}));
  CHECK(what.row(1) == poly({1}));
}

TEST_CASE("W(5,1) counts one-peak permutations") {
  CHECK(triangle(Family::W, 5).entry(5, 1) == 88);
  CHECK(oracle::histogram(5, all, oracle::pk).at(1) == 88);
}

TEST_CASE("triangles against brute-force histograms") {
  const int N = 7;
  const Triangle s = triangle(Family::S, N), p = triangle(Family::P, N), t = triangle(Family::T, N);
  const Triangle w = triangle(Family::W, N), r = triangle(Family::R, N);
  for (int n = 1; n <= N; ++n) {
    CAPTURE(n);
    CHECK(s.row(n) == from_histogram(oracle::histogram(n, oracle::simsun, oracle::des)));
    CHECK(p.row(n) == from_histogram(oracle::histogram(n, oracle::simsun, oracle::pk)));
    CHECK(t.row(n) == from_histogram(oracle::histogram(n, oracle::simsun, uprun)));
    CHECK(w.row(n) == from_histogram(oracle::histogram(n, all, oracle::pk)));
    if (n >= 2)
      CHECK(r.row(n) == from_histogram(oracle::histogram(n, all, oracle::altruns)));
  }
  CHECK(r.row(3) == poly({0, 2, 4}));
  CHECK(r.row(4) == poly({0, 2, 12, 10}));
}

TEST_CASE("Stirling reconstruction is exact") {
  const Triangle s = triangle(Family::S, 15);
  for (int n = 1; n <= 15; ++n)
    CHECK(s_from_stirling(n) == s.row(n));
}

TEST_CASE("mobius_compose rejects a degree above m") {
  CHECK_THROWS_AS(mobius_compose(poly({1, 1, 1}), 1, 1), std::invalid_argument);
  // (1+x)^2 p(x/(1+x)) for p = 1 + x is (1+x)^2 + x(1+x).
  CHECK(mobius_compose(poly({1, 1}), 2, 1) == poly({1, 3, 2}));
}

TEST_CASE("fault injection perturbs exactly the chosen family") {
  const Polynomial clean = triangle(Family::S, 6).row(6);
  set_injected_fault(Family::S);
  CHECK(triangle(Family::S, 6).row(6) != clean);
  CHECK(triangle(Family::W, 3).row(3) == poly({4, 2}));
  set_injected_fault(std::nullopt);
  CHECK(triangle(Family::S, 6).row(6) == clean);
}
