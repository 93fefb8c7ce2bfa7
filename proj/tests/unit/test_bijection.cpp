#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "simsun/bijection.hpp"
#include "simsun/simsun.hpp"

using namespace simsun;

namespace {
std::vector<std::string> words(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps)
    out.push_back(p.to_string());
  return out;
}
} // namespace

TEST_CASE("phi base case") {
  CHECK(words(phi_forward(Permutation::parse("1")).image) == std::vector<std::string>{"12", "21"});
}

TEST_CASE("phi worked example") {
  const auto img = phi_forward(Permutation::parse("3412")).image;
  CHECK(words(img) ==
        std::vector<std::string>{"15423", "35412", "25413", "35421", "14523", "34512", "24513", "34521"});
  for (const auto& t : img)
    CHECK(phi_inverse(t) == Permutation::parse("3412"));
}

TEST_CASE("phi blocks partition S_(n+1) for small n") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> covered;
    for (const Permutation& p : gen_simsun_first(n)) {
      const auto img = phi_forward(p).image;
      const int d = oracle::des({p.word().begin(), p.word().end()});
      CHECK(img.size() == (std::size_t{1} << (n - d)));
      for (const auto& t : img) {
        std::vector<int> w(t.word().begin(), t.word().end());
        CHECK(oracle::pk(w) == d);
        CHECK(covered.insert(w).second);
      }
    }
    long fact = 1;
    for (int i = 2; i <= n + 1; ++i)
      fact *= i;
    CHECK(covered.size() == static_cast<std::size_t>(fact));
  }
}

TEST_CASE("psi worked example and round trip") {
  CHECK(psi_forward(Permutation::parse("3412")).to_string() == "(1,4,3)(2)");
  CHECK(psi_inverse(CycleDecomposition::parse("(1,4,3)(2)")) == Permutation::parse("3412"));
  for (int n = 1; n <= 6; ++n) {
    std::set<CycleDecomposition> seen;
    for (const Permutation& p : gen_simsun_first(n)) {
      const CycleDecomposition c = psi_forward(p);
      CHECK(is_simsun_second(from_cycles(c)));
      CHECK(excedances(from_cycles(c).word()) == descents(p.word()));
      CHECK(psi_inverse(c) == p);
      CHECK(seen.insert(c).second);
    }
  }
}

TEST_CASE("bijections reject non-members") {
  CHECK_THROWS_AS(phi_forward(Permutation::parse("321")), ValidationError);
  CHECK_THROWS_AS(psi_forward(Permutation::parse("321")), ValidationError);
  CHECK_THROWS_AS(psi_inverse(CycleDecomposition::parse("(1,2,3)")), ValidationError);
}

TEST_CASE("insertion history replays") {
  for (const Permutation& p : gen_simsun_first(6))
    CHECK(replay_history(insertion_history(p)) == p);
}

TEST_CASE("exhaustive verifiers") {
  CHECK(verify_phi(6).passed());
  CHECK(verify_psi(7).passed());
}
