#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "simsun/polynomial.hpp"

namespace simsun {

/// Polynomial families produced by recurrence.
enum class Family { S, What, W, R, T, Pplus, Pminus, P, A, Sxq, Sxyq, D };

inline constexpr Family kAllFamilies[] = {Family::S,      Family::What, Family::W, Family::R,
                                          Family::T,      Family::Pplus, Family::Pminus,
                                          Family::P,      Family::A,    Family::Sxq,
                                          Family::Sxyq,   Family::D};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Families whose rows involve q or y besides x.
bool is_multivariate(Family f);

struct Triangle {
  Family family;
  int first_row = 0;
  std::vector<Polynomial> rows;

  int last_row() const { return first_row + static_cast<int>(rows.size()) - 1; }
  const Polynomial& row(int n) const;

  /// Coefficient of x^k in row n; zero outside the stored range.
  Integer entry(int n, int k) const;
};

/// Rows first_row..n_max of the family, exact.
Triangle triangle(Family family, int n_max);

/// Testing hook: perturbs one recurrence by an off-by-one so verifiers can be
/// shown to notice. Process-wide; pass std::nullopt to clear.
void set_injected_fault(std::optional<Family> family);
std::optional<Family> injected_fault();

/// (1+x)^m p(αx/(1+x)) = Σ_k p_k (αx)^k (1+x)^(m-k). Throws std::invalid_argument
/// when deg p > m.
Polynomial mobius_compose(const Polynomial& p, int m, const Rational& alpha);

/// p(n, n-2k+1) from the Stirling-number sum.
Integer p_coeff(int n, int k);

/// S_n(x) rebuilt from Σ_k p(n+1, n-2k+2)(2x-1)^k / (2^(n+1) x). Throws
/// IdentityViolation when the division is not exact.
Polynomial s_from_stirling(int n);

enum class ClosedForm { PFromS, PplusFromS, PminusFromS, TFromS, SxqAtMinusOne };

std::string_view closed_form_name(ClosedForm id);
std::optional<ClosedForm> parse_closed_form(std::string_view name);

/// PFromS, PplusFromS, PminusFromS and TFromS return the row n+1 built from S_n.
/// SxqAtMinusOne returns the closed form of S_n(x,-1), n >= 1.
Polynomial closed_form(ClosedForm id, int n);

} // namespace simsun
