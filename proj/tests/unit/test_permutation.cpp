#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "simsun/permutation.hpp"
#include "simsun/simsun.hpp"

using namespace simsun;

TEST_CASE("permutation parsing and validation") {
  CHECK(Permutation::parse("35142").to_string() == "35142");
  CHECK(Permutation::parse("10,2,1,3,4,5,6,7,8,9").to_string() == "10,2,1,3,4,5,6,7,8,9");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(Permutation({0, 1}), ValidationError);
  const Permutation p = Permutation::parse("35142");
  CHECK(p.inverse().inverse() == p);
}

TEST_CASE("cycle form round-trips and is standard") {
  const CycleDecomposition c = CycleDecomposition::parse("(3,1,4)(2)");
  CHECK(c.to_string() == "(1,4,3)(2)");
  CHECK(from_cycles(c) == Permutation({4, 2, 1, 3}));
  CHECK(to_cycles(Permutation::parse("3412")).to_string() == "(1,3)(2,4)");
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](std::span<const int> w) {
      const Permutation p = Permutation::trusted({w.begin(), w.end()});
      CHECK(from_cycles(to_cycles(p)) == p);
    });
  CHECK_THROWS_AS(CycleDecomposition::parse("(1,2)(2)"), ValidationError);
}

TEST_CASE("word statistics agree with hand-coded scans") {
  const Permutation p = Permutation::parse("514623");
  CHECK(alternating_runs(p.word()) == 4);
  CHECK(up_down_runs(p.word()) == 5);
  for (int n = 1; n <= 7; ++n)
    oracle::all_perms(n, [](const std::vector<int>& w) {
      CHECK(descents(w) == oracle::des(w));
      CHECK(interior_peaks(w) == oracle::pk(w));
      CHECK(alternating_runs(w) == oracle::altruns(w));
    });
}

TEST_CASE("for_each_permutation is lexicographic and complete") {
  std::vector<std::vector<int>> seen;
  for_each_permutation(4, [&](std::span<const int> w) { seen.emplace_back(w.begin(), w.end()); });
  CHECK(seen.size() == 24);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("snakes of small size") {
  int count = 0;
  for_each_signed(2, [&](std::span<const int> w) { count += is_snake(w); });
  CHECK(count == 3);
  count = 0;
  for_each_signed(1, [&](std::span<const int> w) { count += is_snake(w); });
  CHECK(count == 1);
}

TEST_CASE("remove_largest joins predecessor to successor") {
  const CycleDecomposition c = CycleDecomposition::parse("(1,4,3)(2)");
  CHECK(remove_largest(c, 1).to_string() == "(1,3)(2)");
  CHECK(remove_largest(c, 2).to_string() == "(1)(2)");
}

TEST_CASE("simsun filter agrees with the definition") {
  for (int n = 1; n <= 7; ++n)
    oracle::all_perms(n, [](const std::vector<int>& w) { CHECK(is_simsun_first(w) == oracle::simsun(w)); });
}

TEST_CASE("simsun generator sizes are Euler numbers") {
  const long euler[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385};
  for (int n = 1; n <= 7; ++n) {
    CHECK(gen_simsun_first(n).size() == static_cast<std::size_t>(euler[n + 1]));
    CHECK(gen_simsun_second(n).size() == static_cast<std::size_t>(euler[n + 1]));
  }
}

TEST_CASE("labelings reproduce the worked examples") {
  CHECK(label_first(Permutation::parse("3412")).to_string() == "^{y1}34^{x1}1^{y2}2");
  CHECK(label_second(CycleDecomposition::parse("(1,4,3)(2)")).to_string() == "(1^{u1}43^{v1})(2^{v2})");
  CHECK_THROWS_AS(label_first(Permutation::parse("321")), ValidationError);
}

TEST_CASE("second-kind membership rejects double excedances") {
  // 2 -> 3 -> 1 has 1 < 2 < 3 along the cycle: a double excedance at 2.
  CHECK_FALSE(is_simsun_second(Permutation::parse("231")));
  CHECK(is_simsun_second(Permutation::parse("312")));
}
