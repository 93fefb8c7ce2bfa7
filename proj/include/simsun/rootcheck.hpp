#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/polynomial.hpp"
#include "simsun/report.hpp"

namespace simsun {

/// Dense univariate polynomial, coefficients in increasing degree, no trailing zeros.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  /// Requires p.is_univariate_in(Var::x).
  static UPoly from(const Polynomial& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& lead() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;

  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly&) const = default;

  std::string to_string() const;

private:
  void trim();

  std::vector<Rational> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

/// Yun's algorithm: p = c · Π f_i^i with f_i squarefree and pairwise coprime.
/// Entry i-1 holds f_i.
std::vector<UPoly> squarefree_factors(const UPoly& p);

/// 1 + max |a_i / a_n|; every real root lies in (-B, B).
Rational cauchy_bound(const UPoly& p);

class SturmSequence {
public:
  /// p must be nonzero.
  explicit SturmSequence(const UPoly& p);

  /// Sign changes at x, zeros skipped.
  int variations(const Rational& x) const;

  /// Distinct real roots in (a, b] for a < b.
  int count(const Rational& a, const Rational& b) const;

  const std::vector<UPoly>& chain() const { return chain_; }

private:
  std::vector<UPoly> chain_;
};

/// A half-open interval (lo, hi] holding exactly one real root.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

struct RootIsolation {
  UPoly polynomial;
  UPoly squarefree;
  /// Increasing and pairwise disjoint.
  std::vector<RootInterval> roots;

  /// Shrinks roots[i] by bisection until its width is at most `width`.
  void refine(std::size_t i, const Rational& width);

  std::string to_string() const;
};

RootIsolation isolate_roots(const UPoly& p);

struct RzCertificate {
  bool real_rooted = false;
  bool all_nonpositive = false;
  bool all_simple = false;
  RootIsolation isolation;
};

/// Throws std::invalid_argument on the zero polynomial.
RzCertificate certify_rz(const UPoly& p);
RzCertificate certify_rz(const Polynomial& p);

enum class Relation { Interlace, AlternatesLeft, Precede };

std::string_view relation_name(Relation r);

struct RelationReport {
  Relation relation = Relation::Precede;
  /// The relation actually tested: Precede resolves to one of the other two.
  Relation resolved = Relation::Precede;
  bool verdict = false;
  /// The merged root order, e.g. "p1 <= q1 < p2", or the reason for failure.
  std::string detail;
};

/// Interlace needs deg q = deg p + 1, AlternatesLeft equal degrees; Precede picks
/// by degree. Throws std::invalid_argument on a degree mismatch.
RelationReport check_relation(const UPoly& p, const UPoly& q, Relation relation);
RelationReport check_relation(const Polynomial& p, const Polynomial& q, Relation relation);

inline constexpr std::string_view kRootSuites[] = {"rz-family", "lemma-chow", "theorem-interlace",
                                                  "corollary-sxq"};

int default_root_n_max(std::string_view suite);

/// Throws std::invalid_argument for an unknown suite.
IdentityReport verify_roots(std::string_view suite, int n_max);

} // namespace simsun
