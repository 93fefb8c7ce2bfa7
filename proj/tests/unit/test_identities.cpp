#include <doctest.h>

#include "simsun/identities.hpp"
#include "simsun/registry.hpp"
#include "simsun/triangles.hpp"

using namespace simsun;

TEST_CASE("check_range stops at the first failure") {
  const IdentityReport r = check_range("demo", 1, 10, [](int n) -> std::optional<std::string> {
    if (n == 4)
      return "bad";
    return std::nullopt;
  });
  CHECK_FALSE(r.passed());
  CHECK(r.verdicts.size() == 4);
  CHECK(*r.counterexample == "n=4: bad");
}

TEST_CASE("check_range reports thrown violations as failures") {
  const IdentityReport r =
      check_range("demo", 1, 3, [](int) -> std::optional<std::string> { throw IdentityViolation("boom"); });
  CHECK_FALSE(r.passed());
  CHECK(*r.counterexample == "n=1: boom");
}

TEST_CASE("every identity passes at a small bound") {
  for (const IdentityInfo& info : identity_catalog())
    CHECK_MESSAGE(verify_identity(info.id, std::min(7, info.max_n_max)).passed(), info.id);
}

TEST_CASE("identity caps and unknown ids") {
  CHECK_THROWS_AS(verify_identity("I-nope", 5), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("I-filter-gen", 10), std::invalid_argument);
}

TEST_CASE("an injected fault is detected") {
  for (Family f : kAllFamilies) {
    set_injected_fault(f);
    bool any_failed = false;
    for (const auto& e : verify_catalog())
      if (e.kind == VerifyKind::Identity && !run_verify(e, std::min(7, e.max_bound)).passed()) {
        any_failed = true;
        break;
      }
    CHECK_MESSAGE(any_failed, family_name(f));
  }
  set_injected_fault(std::nullopt);
}
