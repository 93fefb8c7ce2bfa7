#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simsun {

/// Raised when a claimed exact identity fails inside a computation that relies on it.
class IdentityViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct IdentityReport {
  std::string id;
  int n_min = 0;
  int n_max = 0;
  /// One entry per tested n, in increasing order; stops at the first failure.
  std::vector<std::pair<int, bool>> verdicts;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// A per-n check returns std::nullopt on success or a description of the failure.
using RangeCheck = std::function<std::optional<std::string>(int n)>;

IdentityReport check_range(std::string id, int n_min, int n_max, const RangeCheck& check);

} // namespace simsun
