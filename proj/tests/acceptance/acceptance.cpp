#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "simsun/bijection.hpp"
#include "simsun/registry.hpp"
#include "simsun/simsun.hpp"
#include "simsun/triangles.hpp"

using namespace simsun;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Runs the registry entry at exactly `bound` and folds the verdict into `o`.
void expect(Outcome& o, const std::string& id, int bound) {
  const auto entry = find_verify(id);
  if (!entry) {
    o.require(false, "missing registry id " + id);
    return;
  }
  const IdentityReport r = run_verify(*entry, bound);
  o.require(r.passed() && r.n_max == bound, id + " " + r.counterexample.value_or("range short"));
}

Polynomial row(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c)
    v.emplace_back(x);
  return Polynomial::from_coefficients(std::span<const Integer>(v));
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(SIMSUN_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Triangle s = triangle(Family::S, 5), p = triangle(Family::P, 5);
  const Triangle pp = triangle(Family::Pplus, 5), pm = triangle(Family::Pminus, 5);
  const Triangle t = triangle(Family::T, 4), w = triangle(Family::W, 3), wh = triangle(Family::What, 1);
  const std::vector<Polynomial> S = {row({1}), row({1, 1}), row({1, 4}), row({1, 11, 4}), row({1, 26, 34})};
  const std::vector<Polynomial> P = {row({1}), row({2}), row({3, 2}), row({4, 12}), row({5, 44, 12})};
  const std::vector<Polynomial> PP = {row({1}), row({1}), row({2}), row({3, 4}), row({4, 22})};
  const std::vector<Polynomial> PM = {row({1}), row({1}), row({1, 2}), row({1, 8}), row({1, 22, 12})};
  const std::vector<Polynomial> T = {row({0, 1}), row({0, 1, 1}), row({0, 1, 2, 2}), row({0, 1, 3, 8, 4})};
  for (int n = 1; n <= 5; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    o.require(s.row(n) == S[i], "S_" + std::to_string(n));
    o.require(p.row(n) == P[i], "P_" + std::to_string(n));
    o.require(pp.row(n) == PP[i], "P+_" + std::to_string(n));
    o.require(pm.row(n) == PM[i], "P-_" + std::to_string(n));
    if (n <= 4)
      o.require(t.row(n) == T[i], "T_" + std::to_string(n));
  }
  o.require(w.row(3) == row({4, 2}), "W_3");
  o.require(wh.row(0) == row({1}) && wh.row(1) == row({1}), "What_0, What_1");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const char* id : {"I-enum-S", "I-enum-T", "I-enum-P", "I-enum-Pplus", "I-enum-Pminus"})
    expect(o, id, 12);
  expect(o, "I-enum-Sxq", 11);
  for (const char* id : {"I-enum-W", "I-enum-What", "I-enum-R"})
    expect(o, id, 10);
  return o;
}

Outcome ac3() {
  Outcome o;
  expect(o, "I-filter-gen", 9);
  return o;
}

Outcome ac4() {
  Outcome o;
  expect(o, "I-card", 10);
  return o;
}

Outcome ac5() {
  Outcome o;
  expect(o, "phi", 8);
  return o;
}

Outcome ac6() {
  Outcome o;
  expect(o, "psi", 9);
  o.require(psi_forward(Permutation::parse("3412")).to_string() == "(1,4,3)(2)", "3412 example");
  o.require(label_second(psi_forward(Permutation::parse("3412"))).to_string() == "(1^{u1}43^{v1})(2^{v2})",
            "3412 labeled example");
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const char* id : {"I-conv5", "I-eq8", "I-lemma2", "I-eq18", "I-eq19", "I-eq20", "I-pn0", "I-spt", "I-eq11",
                         "I-tformula", "I-corner", "I-sundaram"})
    expect(o, id, 12);
  expect(o, "I-euler", 10);
  return o;
}

Outcome ac8() {
  Outcome o;
  expect(o, "I-stirling", 15);
  return o;
}

Outcome ac9() {
  Outcome o;
  for (const char* id : {"coeff-match-Sxz", "coeff-match-What", "S-eq-What-squared"})
    expect(o, id, 12);
  expect(o, "pde21", 10);
  expect(o, "coeff-match-Sxq", 10);
  expect(o, "one-minus-sin", 9);
  expect(o, "springer", 8);
  expect(o, "trivar-egf", 9);
  return o;
}

Outcome ac10() {
  Outcome o;
  expect(o, "I-cud", 9);
  expect(o, "I-sxq-minus1", 20);
  return o;
}

Outcome ac11() {
  Outcome o;
  expect(o, "rz-family", 25);
  expect(o, "lemma-chow", 20);
  expect(o, "theorem-interlace", 20);
  expect(o, "corollary-sxq", 15);
  return o;
}

Outcome ac12() {
  Outcome o;
  const int clean = run_cli("verify all");
  o.require(clean == 0, "verify all exited " + std::to_string(clean));
  for (Family f : kAllFamilies) {
    const int code = run_cli("verify all --inject-fault " + std::string(family_name(f)));
    o.require(code == 1, "fault in " + std::string(family_name(f)) + " exited " + std::to_string(code));
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 paper-literal rows", ac1},
      {"AC2 enumeration matches recurrence", ac2},
      {"AC3 filter matches generator", ac3},
      {"AC4 cardinalities are Euler numbers", ac4},
      {"AC5 phi blocks partition S_(n+1)", ac5},
      {"AC6 psi transports des to exc", ac6},
      {"AC7 polynomial identities", ac7},
      {"AC8 Stirling reconstruction", ac8},
      {"AC9 generating functions", ac9},
      {"AC10 equidistributions", ac10},
      {"AC11 root certification", ac11},
      {"AC12 verify all and mutation smoke test", ac12},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %s  (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.ok ? "" : "  ",
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
