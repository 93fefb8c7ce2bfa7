#include "simsun/registry.hpp"

#include <algorithm>
#include <stdexcept>

#include "simsun/bijection.hpp"
#include "simsun/identities.hpp"
#include "simsun/rootcheck.hpp"
#include "simsun/series.hpp"

namespace simsun {

std::string_view kind_name(VerifyKind k) {
  switch (k) {
  case VerifyKind::Identity:
    return "identity";
  case VerifyKind::Series:
    return "series";
  case VerifyKind::Roots:
    return "roots";
  case VerifyKind::Bijection:
    return "bijection";
  }
  return "?";
}

const std::vector<VerifyEntry>& verify_catalog() {
  static const std::vector<VerifyEntry> catalog = [] {
    std::vector<VerifyEntry> out;
    for (const IdentityInfo& i : identity_catalog())
      out.push_back({std::string(i.id), VerifyKind::Identity, i.default_n_max, i.max_n_max, std::string(i.summary)});
    for (std::string_view id : kSeriesIds)
      out.push_back({std::string(id), VerifyKind::Series, default_series_order(id), max_series_order(id),
                     "series identity, checked to the given order"});
    for (std::string_view suite : kRootSuites)
      out.push_back({std::string(suite), VerifyKind::Roots, default_root_n_max(suite), 40,
                     "exact real-root certification"});
    out.push_back({"phi", VerifyKind::Bijection, 8, 8, "blocks of the peak correspondence partition S_(n+1)"});
    out.push_back({"psi", VerifyKind::Bijection, 9, 9, "des-to-exc bijection RS_n -> SS_n"});
    return out;
  }();
  return catalog;
}

std::optional<VerifyEntry> find_verify(std::string_view id) {
  for (const auto& e : verify_catalog())
    if (e.id == id)
      return e;
  return std::nullopt;
}

IdentityReport run_verify(const VerifyEntry& entry, int bound) {
  if (bound > entry.max_bound)
    throw std::invalid_argument(entry.id + ": bound is capped at " + std::to_string(entry.max_bound));
  switch (entry.kind) {
  case VerifyKind::Identity:
    return verify_identity(entry.id, bound);
  case VerifyKind::Series:
    return verify_series(entry.id, bound);
  case VerifyKind::Roots:
    return verify_roots(entry.id, bound);
  case VerifyKind::Bijection:
    return entry.id == "phi" ? verify_phi(bound) : verify_psi(bound);
  }
  throw std::logic_error("run_verify: unhandled kind");
}

std::vector<IdentityReport> run_all(std::optional<int> bound) {
  std::vector<IdentityReport> out;
  for (const auto& e : verify_catalog())
    out.push_back(run_verify(e, bound ? std::min(*bound, e.max_bound) : e.default_bound));
  return out;
}

} // namespace simsun
