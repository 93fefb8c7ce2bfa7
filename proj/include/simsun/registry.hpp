#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/report.hpp"

namespace simsun {

enum class VerifyKind { Identity, Series, Roots, Bijection };

std::string_view kind_name(VerifyKind k);

/// One verifiable claim. `bound` is n_max, or the truncation order for series ids.
struct VerifyEntry {
  std::string id;
  VerifyKind kind = VerifyKind::Identity;
  int default_bound = 0;
  int max_bound = 0;
  std::string summary;
};

/// Identities, series checks, root suites and bijections, in reporting order.
const std::vector<VerifyEntry>& verify_catalog();

std::optional<VerifyEntry> find_verify(std::string_view id);

/// Throws std::invalid_argument when bound exceeds entry.max_bound.
IdentityReport run_verify(const VerifyEntry& entry, int bound);

/// Runs every entry at min(bound, max_bound), or at its default when bound is empty.
std::vector<IdentityReport> run_all(std::optional<int> bound);

} // namespace simsun
