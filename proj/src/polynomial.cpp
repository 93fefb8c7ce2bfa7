#include "simsun/polynomial.hpp"

#include <stdexcept>

namespace simsun {

char var_name(Var v) {
  switch (v) {
  case Var::x:
    return 'x';
  case Var::q:
    return 'q';
  case Var::y:
    return 'y';
  }
  return '?';
}

bool GradedLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = a[0] + a[1] + a[2];
  const unsigned db = b[0] + b[1] + b[2];
  if (da != db)
    return da < db;
  return a < b;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0)
    terms_.emplace(Exponents{0, 0, 0}, c);
}

Polynomial Polynomial::variable(Var v) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(1, e);
}

Polynomial Polynomial::monomial(const Rational& c, Exponents e) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::from_coefficients(std::span<const Integer> coeffs, Var v) {
  Polynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = static_cast<unsigned>(k);
    p.add_term(e, Rational(coeffs[k]));
  }
  return p;
}

Polynomial Polynomial::from_coefficients(std::span<const Rational> coeffs, Var v) {
  Polynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = static_cast<unsigned>(k);
    p.add_term(e, coeffs[k]);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

bool Polynomial::is_integral() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1)
      return false;
  return true;
}

int Polynomial::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(v)]));
  return d;
}

Rational Polynomial::coefficient(Exponents e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_univariate_in(Var v) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != static_cast<std::size_t>(v) && e[i] != 0)
        return false;
  return true;
}

std::vector<Rational> Polynomial::coefficients(Var v) const {
  if (!is_univariate_in(v))
    throw std::invalid_argument(std::string("polynomial is not univariate in ") + var_name(v));
  std::vector<Rational> out(static_cast<std::size_t>(degree(v) + 1));
  for (const auto& [e, c] : terms_)
    out[e[static_cast<std::size_t>(v)]] = c;
  return out;
}

std::vector<Integer> Polynomial::integer_coefficients(Var v) const {
  std::vector<Integer> out;
  for (const auto& c : coefficients(v)) {
    if (c.get_den() != 1)
      throw std::invalid_argument("polynomial has a non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

Polynomial Polynomial::coefficient_of(Var v, unsigned k) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(v)] != k)
      continue;
    Exponents rest = e;
    rest[static_cast<std::size_t>(v)] = 0;
    out.add_term(rest, c);
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::scale(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_)
    c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U)
      result *= base;
    e >>= 1U;
    if (e > 0)
      base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(Var v) const {
  Polynomial out;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0)
      continue;
    Exponents d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

Polynomial Polynomial::eval_at(Var v, const Rational& c) const { return substitute(v, Polynomial(c)); }

Polynomial Polynomial::substitute(Var v, const Polynomial& replacement) const {
  const auto i = static_cast<std::size_t>(v);
  std::vector<Polynomial> powers{Polynomial(1)};
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[i])
      powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[i] = 0;
    out += monomial(c, rest) * powers[e[i]];
  }
  return out;
}

Rational Polynomial::evaluate_at_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_)
    sum += c;
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0)
        s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += var_name(static_cast<Var>(i));
      if (e[i] > 1)
        mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      s += mag.get_str();
    else if (mag == 1)
      s += mono;
    else
      s += mag.get_str() + '*' + mono;
  }
  return s;
}

Polynomial x_pow(unsigned k) { return Polynomial::monomial(1, {k, 0, 0}); }

} // namespace simsun
