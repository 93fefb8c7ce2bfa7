#pragma once

#include <span>
#include <string_view>

#include "simsun/report.hpp"

namespace simsun {

struct IdentityInfo {
  std::string_view id;
  int n_min;
  int default_n_max;
  /// Largest accepted n_max; enumeration-backed checks are capped.
  int max_n_max;
  std::string_view summary;
};

/// Every polynomial and enumeration identity, in reporting order.
std::span<const IdentityInfo> identity_catalog();

/// Throws std::invalid_argument for an unknown id or n_max beyond its cap.
IdentityReport verify_identity(std::string_view id, int n_max);

} // namespace simsun
