#include "simsun/triangles.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "simsun/numbers.hpp"
#include "simsun/report.hpp"

namespace simsun {

namespace {

constexpr int kNoFault = -1;
std::atomic<int> g_fault{kNoFault};

bool faulty(Family f) { return g_fault.load(std::memory_order_relaxed) == static_cast<int>(f); }

using Row = std::vector<Integer>;

Integer at(const Row& row, int k) {
  if (k < 0 || k >= static_cast<int>(row.size()))
    return 0;
  return row[static_cast<std::size_t>(k)];
}

void trim(Row& row) {
  while (!row.empty() && row.back() == 0)
    row.pop_back();
}

Polynomial to_poly(const Row& row) { return Polynomial::from_coefficients(std::span<const Integer>(row)); }

Triangle from_rows(Family f, int first, const std::vector<Row>& rows) {
  Triangle t{f, first, {}};
  for (const auto& r : rows)
    t.rows.push_back(to_poly(r));
  return t;
}

const Polynomial kX = Polynomial::variable(Var::x);
const Polynomial kQ = Polynomial::variable(Var::q);
const Polynomial kY = Polynomial::variable(Var::y);

// S(n,k) = (k+1) S(n-1,k) + (n-2k+1) S(n-1,k-1), S(0,0) = 1
std::vector<Row> s_rows(int n_max) {
  std::vector<Row> rows{{1}};
  const int bump = faulty(Family::S) ? 1 : 0;
  for (int n = 1; n <= n_max; ++n) {
    const Row& prev = rows.back();
    Row row(static_cast<std::size_t>(n / 2) + 1);
    for (int k = 0; k <= n / 2; ++k)
      row[static_cast<std::size_t>(k)] = (k + 1 + bump) * at(prev, k) + (n - 2 * k + 1) * at(prev, k - 1);
    trim(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

// What_{n+1} = (1+nx) What_n + 2x(1-x) What_n', What_0 = What_1 = 1
Triangle what_triangle(int n_max) {
  Triangle t{Family::What, 0, {Polynomial(1)}};
  const int bump = faulty(Family::What) ? 1 : 0;
  const Polynomial two_x_one_minus_x = 2 * kX * (1 - kX);
  for (int n = 0; n < n_max; ++n) {
    const Polynomial& w = t.rows.back();
    t.rows.push_back((1 + (n + bump) * kX) * w + two_x_one_minus_x * w.derivative(Var::x));
  }
  return t;
}

// W_{n+1} = (nx - x + 2) W_n + 2x(1-x) W_n', W_1 = 1
Triangle w_triangle(int n_max) {
  Triangle t{Family::W, 1, {Polynomial(1)}};
  const int bump = faulty(Family::W) ? 1 : 0;
  const Polynomial two_x_one_minus_x = 2 * kX * (1 - kX);
  for (int n = 1; n < n_max; ++n) {
    const Polynomial& w = t.rows.back();
    t.rows.push_back(((n + bump) * kX - kX + 2) * w + two_x_one_minus_x * w.derivative(Var::x));
  }
  return t;
}

// R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2), R(1,0) = 1
std::vector<Row> r_rows(int n_max) {
  std::vector<Row> rows{{1}};
  const int bump = faulty(Family::R) ? 1 : 0;
  for (int n = 2; n <= n_max; ++n) {
    const Row& prev = rows.back();
    Row row(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      row[static_cast<std::size_t>(k)] =
          (k + bump) * at(prev, k) + 2 * at(prev, k - 1) + (n - k) * at(prev, k - 2);
    trim(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

// T(n,k) = ceil(k/2) T(n-1,k) + T(n-1,k-1) + (n-k+1) T(n-1,k-2), T(0,0) = 1
std::vector<Row> t_rows(int n_max) {
  std::vector<Row> rows{{1}};
  const int bump = faulty(Family::T) ? 1 : 0;
  for (int n = 1; n <= n_max; ++n) {
    const Row& prev = rows.back();
    Row row(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      row[static_cast<std::size_t>(k)] =
          ((k + 1) / 2 + bump) * at(prev, k) + at(prev, k - 1) + (n - k + 1) * at(prev, k - 2);
    trim(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Rows n = 1.. of P+ and P-. Row 1 is the listed literal 1; rows from n = 2 on
// follow the coupled recurrence seeded with P+_2 = P-_2 = 1.
std::pair<std::vector<Row>, std::vector<Row>> p_sign_rows(int n_max) {
  std::vector<Row> plus{{1}}, minus{{1}};
  if (n_max >= 2) {
    plus.push_back({1});
    minus.push_back({1});
  }
  const int bump_plus = faulty(Family::Pplus) ? 1 : 0;
  const int bump_minus = faulty(Family::Pminus) ? 1 : 0;
  for (int n = 2; n < n_max; ++n) {
    const Row& pp = plus.back();
    const Row& pm = minus.back();
    Row next_plus(static_cast<std::size_t>(n / 2) + 2), next_minus(static_cast<std::size_t>(n / 2) + 2);
    for (int k = 0; k < static_cast<int>(next_plus.size()); ++k) {
      const auto ku = static_cast<std::size_t>(k);
      next_plus[ku] = (k + 1 + bump_plus) * at(pp, k) + (n - 2 * k) * at(pp, k - 1) + at(pm, k);
      next_minus[ku] = (k + 1 + bump_minus) * at(pm, k) + (n - 2 * k + 1) * at(pm, k - 1) + at(pp, k - 1);
    }
    trim(next_plus);
    trim(next_minus);
    plus.push_back(std::move(next_plus));
    minus.push_back(std::move(next_minus));
  }
  return {std::move(plus), std::move(minus)};
}

Triangle p_triangle(int n_max) {
  auto [plus, minus] = p_sign_rows(n_max);
  Triangle t{Family::P, 1, {Polynomial(1)}};
  const bool fault = faulty(Family::P);
  for (std::size_t i = 1; i < plus.size(); ++i) {
    Polynomial row = to_poly(plus[i]);
    row += fault ? kX * to_poly(minus[i]) : to_poly(minus[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

// a_i(n+1) = i a_i(n) + (n-2i+2) a_{i-1}(n), a_0(1) = 1
std::vector<Row> a_rows(int n_max) {
  std::vector<Row> rows{{1}};
  const int bump = faulty(Family::A) ? 1 : 0;
  for (int n = 1; n < n_max; ++n) {
    const Row& prev = rows.back();
    Row row(static_cast<std::size_t>((n + 1) / 2) + 1);
    for (int i = 0; i < static_cast<int>(row.size()); ++i)
      row[static_cast<std::size_t>(i)] = (i + bump) * at(prev, i) + (n - 2 * i + 2) * at(prev, i - 1);
    trim(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

// S_{n+1}(x,q) = (q + nx) S_n(x,q) + x(1-2x) dS_n/dx, S_0 = 1
Triangle sxq_triangle(int n_max) {
  Triangle t{Family::Sxq, 0, {Polynomial(1)}};
  const int bump = faulty(Family::Sxq) ? 1 : 0;
  const Polynomial x_one_minus_2x = kX * (1 - 2 * kX);
  for (int n = 0; n < n_max; ++n) {
    const Polynomial& s = t.rows.back();
    t.rows.push_back((kQ + (n + bump) * kX) * s + x_one_minus_2x * s.derivative(Var::x));
  }
  return t;
}

// S_n(x,y,q) = Σ_i C(n,i) (yq - q)^i S_{n-i}(x,q)
Triangle sxyq_triangle(int n_max) {
  const Triangle sxq = sxq_triangle(n_max);
  Triangle t{Family::Sxyq, 0, {}};
  const int bump = faulty(Family::Sxyq) ? 1 : 0;
  const Polynomial base = kY * kQ - kQ;
  for (int n = 0; n <= n_max; ++n) {
    Polynomial row;
    for (int i = 0; i <= n; ++i)
      row += Rational(binomial(n + bump, i)) * base.pow(static_cast<unsigned>(i)) * sxq.row(n - i);
    t.rows.push_back(std::move(row));
  }
  return t;
}

// D_{n+1}(x) = x S_n(x)
Triangle d_triangle(int n_max) {
  Triangle t{Family::D, 1, {}};
  const auto s = s_rows(std::max(0, n_max - 1));
  const Polynomial shift = faulty(Family::D) ? kX * kX : kX;
  for (int n = 1; n <= n_max; ++n)
    t.rows.push_back(shift * to_poly(s[static_cast<std::size_t>(n - 1)]));
  return t;
}

} // namespace

std::string_view family_name(Family f) {
  switch (f) {
  case Family::S:
    return "S";
  case Family::What:
    return "What";
  case Family::W:
    return "W";
  case Family::R:
    return "R";
  case Family::T:
    return "T";
  case Family::Pplus:
    return "Pplus";
  case Family::Pminus:
    return "Pminus";
  case Family::P:
    return "P";
  case Family::A:
    return "A";
  case Family::Sxq:
    return "Sxq";
  case Family::Sxyq:
    return "Sxyq";
  case Family::D:
    return "D";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "P+")
    return Family::Pplus;
  if (name == "P-")
    return Family::Pminus;
  for (Family f : kAllFamilies)
    if (family_name(f) == name)
      return f;
  return std::nullopt;
}

bool is_multivariate(Family f) { return f == Family::Sxq || f == Family::Sxyq; }

const Polynomial& Triangle::row(int n) const {
  if (n < first_row || n > last_row())
    throw std::out_of_range("row " + std::to_string(n) + " of " + std::string(family_name(family)) +
                            " is not available");
  return rows[static_cast<std::size_t>(n - first_row)];
}

Integer Triangle::entry(int n, int k) const {
  if (n < first_row || n > last_row() || k < 0)
    return 0;
  const Rational c = row(n).coefficient({static_cast<unsigned>(k), 0, 0});
  return c.get_num();
}

Triangle triangle(Family family, int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("n_max must be nonnegative");
  switch (family) {
  case Family::S:
    return from_rows(family, 0, s_rows(n_max));
  case Family::What:
    return what_triangle(n_max);
  case Family::W:
    return w_triangle(std::max(1, n_max));
  case Family::R:
    return from_rows(family, 1, r_rows(std::max(1, n_max)));
  case Family::T:
    return from_rows(family, 0, t_rows(n_max));
  case Family::Pplus:
    return from_rows(family, 1, p_sign_rows(std::max(1, n_max)).first);
  case Family::Pminus:
    return from_rows(family, 1, p_sign_rows(std::max(1, n_max)).second);
  case Family::P:
    return p_triangle(std::max(1, n_max));
  case Family::A:
    return from_rows(family, 1, a_rows(std::max(1, n_max)));
  case Family::Sxq:
    return sxq_triangle(n_max);
  case Family::Sxyq:
    return sxyq_triangle(n_max);
  case Family::D:
    return d_triangle(std::max(1, n_max));
  }
  throw std::invalid_argument("unknown family");
}

void set_injected_fault(std::optional<Family> family) {
  g_fault.store(family ? static_cast<int>(*family) : kNoFault, std::memory_order_relaxed);
}

std::optional<Family> injected_fault() {
  const int f = g_fault.load(std::memory_order_relaxed);
  if (f == kNoFault)
    return std::nullopt;
  return static_cast<Family>(f);
}

Polynomial mobius_compose(const Polynomial& p, int m, const Rational& alpha) {
  if (p.degree(Var::x) > m)
    throw std::invalid_argument("mobius_compose: degree exceeds m, result is not a polynomial");
  const auto coeffs = p.coefficients(Var::x);
  const Polynomial one_plus_x = 1 + kX;
  Polynomial out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0)
      continue;
    const auto ku = static_cast<unsigned>(k);
    Rational scale = coeffs[k];
    for (unsigned i = 0; i < ku; ++i)
      scale *= alpha;
    out += scale * x_pow(ku) * one_plus_x.pow(static_cast<unsigned>(m) - ku);
  }
  return out;
}

Integer p_coeff(int n, int k) {
  Integer sum = 0;
  for (int i = 1; i <= n; ++i) {
    const Integer bracket = binomial(i, n - 2 * k) - binomial(i, n - 2 * k + 1);
    if (bracket == 0)
      continue;
    Integer term = factorial(i) * stirling2(n, i) * pow2(n - i) * bracket;
    if ((n - i) % 2 != 0)
      term = -term;
    sum += term;
  }
  return k % 2 == 0 ? sum : Integer(-sum);
}

Polynomial s_from_stirling(int n) {
  if (n < 1)
    throw std::invalid_argument("s_from_stirling requires n >= 1");
  const Polynomial two_x_minus_one = 2 * kX - 1;
  Polynomial sum;
  for (int k = 0; k <= n / 2 + 1; ++k)
    sum += Rational(p_coeff(n + 1, k)) * two_x_minus_one.pow(static_cast<unsigned>(k));

  const Integer divisor = pow2(n + 1);
  const auto coeffs = sum.integer_coefficients(Var::x);
  if (coeffs.empty() || coeffs[0] != 0)
    throw IdentityViolation("Stirling sum for n=" + std::to_string(n) + " is not divisible by x");
  std::vector<Integer> quotient;
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (!mpz_divisible_p(coeffs[k].get_mpz_t(), divisor.get_mpz_t()))
      throw IdentityViolation("Stirling sum for n=" + std::to_string(n) + " is not divisible by 2^" +
                              std::to_string(n + 1));
    quotient.push_back(coeffs[k] / divisor);
  }
  return Polynomial::from_coefficients(std::span<const Integer>(quotient));
}

std::string_view closed_form_name(ClosedForm id) {
  switch (id) {
  case ClosedForm::PFromS:
    return "P-from-S";
  case ClosedForm::PplusFromS:
    return "Pplus-from-S";
  case ClosedForm::PminusFromS:
    return "Pminus-from-S";
  case ClosedForm::TFromS:
    return "T-from-S";
  case ClosedForm::SxqAtMinusOne:
    return "Sxq-at-minus1";
  }
  return "?";
}

std::optional<ClosedForm> parse_closed_form(std::string_view name) {
  for (auto id : {ClosedForm::PFromS, ClosedForm::PplusFromS, ClosedForm::PminusFromS, ClosedForm::TFromS,
                  ClosedForm::SxqAtMinusOne})
    if (closed_form_name(id) == name)
      return id;
  return std::nullopt;
}

Polynomial closed_form(ClosedForm id, int n) {
  if (id == ClosedForm::SxqAtMinusOne) {
    if (n < 1)
      throw std::invalid_argument("Sxq-at-minus1 requires n >= 1");
    const Polynomial one_minus_2x = 1 - 2 * kX;
    const auto m = static_cast<unsigned>(n / 2);
    if (n % 2 == 0)
      return (1 - kX) * one_minus_2x.pow(m - 1);
    return -one_minus_2x.pow(m);
  }
  if (n < 0)
    throw std::invalid_argument("closed forms require n >= 0");
  const Polynomial s = triangle(Family::S, n).row(n);
  const Polynomial ds = s.derivative(Var::x);
  switch (id) {
  case ClosedForm::PFromS:
    return (n + 1) * s - kX * ds;
  case ClosedForm::PplusFromS:
    return n * s - 2 * kX * ds;
  case ClosedForm::PminusFromS:
    return s + kX * ds;
  case ClosedForm::TFromS: {
    const Polynomial x2 = kX * kX;
    // The derivative term is d/dx[S_n(x^2)] = 2x S_n'(x^2).
    return kX * (1 + n * kX) * s.substitute(Var::x, x2) + x2 * kX * (1 - 2 * kX) * ds.substitute(Var::x, x2);
  }
  case ClosedForm::SxqAtMinusOne:
    break;
  }
  throw std::invalid_argument("unknown closed form");
}

} // namespace simsun
