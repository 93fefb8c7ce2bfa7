#include <doctest.h>

#include "simsun/rootcheck.hpp"
#include "simsun/triangles.hpp"

using namespace simsun;

namespace {
UPoly from_roots(std::initializer_list<long> roots) {
  UPoly p(std::vector<Rational>{1});
  for (long r : roots)
    p = p * UPoly(std::vector<Rational>{Rational(-r), 1});
  return p;
}
} // namespace

TEST_CASE("Sturm counts match known roots") {
  const UPoly p = from_roots({-3, -2, -1, 4});
  const SturmSequence s(p);
  CHECK(s.count(-10, 10) == 4);
  CHECK(s.count(-2, 4) == 2); // (-2, 4] holds -1 and 4
  CHECK(s.count(-3, -2) == 1);
  CHECK(s.count(0, 3) == 0);
  // x^2 + 1 has no real roots.
  CHECK(SturmSequence(UPoly(std::vector<Rational>{1, 0, 1})).count(-100, 100) == 0);
}

TEST_CASE("Sturm count over the Cauchy bound equals the isolated root count") {
  const Triangle s = triangle(Family::S, 14);
  for (int n = 2; n <= 14; ++n) {
    const UPoly p = UPoly::from(s.row(n));
    const Rational b = cauchy_bound(p);
    const RootIsolation iso = isolate_roots(p);
    CHECK(SturmSequence(p).count(-b, b) == static_cast<int>(iso.roots.size()));
    for (const auto& r : iso.roots)
      CHECK(p.sign_at(r.lo) * p.sign_at(r.hi) <= 0);
  }
}

TEST_CASE("multiplicities from squarefree factorization") {
  const UPoly p = from_roots({-1, -1, -2, 3, 3, 3});
  const RootIsolation iso = isolate_roots(p);
  REQUIRE(iso.roots.size() == 3);
  CHECK(iso.roots[0].multiplicity == 1);
  CHECK(iso.roots[1].multiplicity == 2);
  CHECK(iso.roots[2].multiplicity == 3);
  const RzCertificate c = certify_rz(p);
  CHECK(c.real_rooted);
  CHECK_FALSE(c.all_simple);
  CHECK_FALSE(c.all_nonpositive);
}

TEST_CASE("real-rootedness fails for complex roots") {
  // (x^2 + 1)(x + 1)
  const UPoly p = UPoly(std::vector<Rational>{1, 0, 1}) * from_roots({-1});
  CHECK_FALSE(certify_rz(p).real_rooted);
}

TEST_CASE("gcd and squarefree part") {
  const UPoly a = from_roots({-1, 2, 2}), b = from_roots({2, 5});
  CHECK(gcd(a, b) == from_roots({2}));
  CHECK(squarefree_part(a) == from_roots({-1, 2}));
  const auto [q, r] = divmod(a, b);
  CHECK(r.degree() < b.degree());
  for (long t = -3; t <= 3; ++t)
    CHECK(q(t) * b(t) + r(t) == a(t));
}

TEST_CASE("interlacing relations on hand-made roots") {
  // roots of p: -2; roots of q: -3, -1. Interlace: q1 <= p1 <= q2.
  CHECK(check_relation(from_roots({-2}), from_roots({-3, -1}), Relation::Interlace).verdict);
  CHECK_FALSE(check_relation(from_roots({-4}), from_roots({-3, -1}), Relation::Interlace).verdict);
  // Equal degree: p's roots -3, -1 alternate left of q's -2, 0.
  CHECK(check_relation(from_roots({-3, -1}), from_roots({-2, 0}), Relation::AlternatesLeft).verdict);
  CHECK_FALSE(check_relation(from_roots({-2, 0}), from_roots({-3, -1}), Relation::AlternatesLeft).verdict);
  // Shared roots are allowed and detected exactly.
  CHECK(check_relation(from_roots({-2}), from_roots({-2, -1}), Relation::Interlace).verdict);
  CHECK_THROWS_AS(check_relation(from_roots({-2}), from_roots({-2, -1, 0}), Relation::Interlace),
                  std::invalid_argument);
}

TEST_CASE("root suites at small bounds") {
  for (std::string_view suite : kRootSuites)
    CHECK(verify_roots(suite, 8).passed());
}
