#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simsun/report.hpp"
#include "simsun/series.hpp"
#include "simsun/triangles.hpp"

namespace simsun {

enum class Format { Text, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// A table of strings with a trailing count, used by enumerate and bijection.
struct Listing {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool show_count = true;
};

/// Coefficient arrays in increasing x-degree for univariate polynomials; a list of
/// {"x","q","y","value"} terms otherwise. Values are decimal strings.
nlohmann::ordered_json polynomial_json(const Polynomial& p);

/// Rows first_row..last_row. CSV schema: family,n,k,value, where k is the x-exponent
/// or "i:j:l" (exponents of x, q, y) for multivariate families.
std::string render_triangle(const Triangle& t, Format f);

/// Row n holds n!·[z^n].
std::string render_series(std::string_view name, const FormalSeries& s, Format f);

std::string render_reports(std::string_view command, const nlohmann::ordered_json& params,
                           const std::vector<IdentityReport>& reports, Format f);

std::string render_listing(std::string_view command, const nlohmann::ordered_json& params, const Listing& listing,
                           Format f);

inline constexpr std::string_view kEnumerateClasses[] = {"simsun1", "simsun2", "snakes", "alternating", "cud"};

/// Largest n accepted by enumerate for the class.
int enumerate_bound(std::string_view cls);

/// Lexicographic listing with statistic columns. Throws std::invalid_argument for an
/// unknown class or n outside [1, enumerate_bound(cls)].
Listing enumerate_listing(std::string_view cls, int n);

} // namespace simsun
