#include "simsun/rootcheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "simsun/triangles.hpp"

namespace simsun {

// --- UPoly -------------------------------------------------------------------

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

UPoly UPoly::from(const Polynomial& p) {
  if (!p.is_univariate_in(Var::x))
    throw std::invalid_argument("UPoly: " + p.to_string() + " is not univariate in x");
  return UPoly(p.coefficients(Var::x));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rational& x) const { return sgn((*this)(x)); }

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty())
    return {};
  std::vector<Rational> m = c_;
  const Rational l = c_.back();
  for (auto& c : m)
    c /= l;
  return UPoly(std::move(m));
}

UPoly operator-(const UPoly& a) {
  std::vector<Rational> m = a.c_;
  for (auto& c : m)
    c = -c;
  return UPoly(std::move(m));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> m(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      m[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(m));
}

std::string UPoly::to_string() const {
  return Polynomial::from_coefficients(std::span<const Rational>(c_)).to_string();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero())
    throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db)
    return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = r[static_cast<std::size_t>(k)] / b.lead();
    q[static_cast<std::size_t>(k - db)] = f;
    if (f == 0)
      continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0)
    return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

namespace {

UPoly minus(const UPoly& a, const UPoly& b) {
  std::vector<Rational> diff = a.coeffs();
  diff.resize(std::max(diff.size(), b.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < b.coeffs().size(); ++i)
    diff[i] -= b.coeffs()[i];
  return UPoly(std::move(diff));
}

} // namespace

std::vector<UPoly> squarefree_factors(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0)
    return out;
  const UPoly dp = p.derivative();
  const UPoly a0 = gcd(p, dp);
  UPoly b = divmod(p, a0).first;
  UPoly d = minus(divmod(dp, a0).first, b.derivative());
  while (b.degree() > 0) {
    const UPoly a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    d = minus(divmod(d, a).first, b.derivative());
  }
  return out;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k)
    m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(k)] / p.lead())));
  return m + 1;
}

// --- Sturm ---------------------------------------------------------------------

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("SturmSequence: zero polynomial");
  chain_.push_back(p);
  UPoly next = p.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    next = -divmod(chain_[chain_.size() - 2], chain_.back()).second;
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& f : chain_) {
    const int s = f.sign_at(x);
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

// --- isolation -----------------------------------------------------------------

namespace {

void bisect(const SturmSequence& s, const Rational& a, const Rational& b, std::vector<RootInterval>& out) {
  const int c = s.count(a, b);
  if (c == 0)
    return;
  if (c == 1) {
    out.push_back({a, b, 1});
    return;
  }
  const Rational mid = (a + b) / 2;
  bisect(s, a, mid, out);
  bisect(s, mid, b, out);
}

void halve(const SturmSequence& s, RootInterval& r) {
  const Rational mid = (r.lo + r.hi) / 2;
  if (s.count(r.lo, mid) == 1)
    r.hi = mid;
  else
    r.lo = mid;
}

std::string fraction(const Rational& r) { return r.get_str(); }

} // namespace

void RootIsolation::refine(std::size_t i, const Rational& width) {
  const SturmSequence s(squarefree);
  auto& r = roots.at(i);
  while (r.hi - r.lo > width)
    halve(s, r);
}

std::string RootIsolation::to_string() const {
  std::string out;
  for (const auto& r : roots) {
    if (!out.empty())
      out += ' ';
    out += "(" + fraction(r.lo) + ", " + fraction(r.hi) + "]";
    if (r.multiplicity > 1)
      out += "^" + std::to_string(r.multiplicity);
  }
  return out;
}

RootIsolation isolate_roots(const UPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("isolate_roots: zero polynomial");
  RootIsolation iso{p, squarefree_part(p), {}};
  if (iso.squarefree.degree() <= 0)
    return iso;
  const SturmSequence s(iso.squarefree);
  const Rational b = cauchy_bound(iso.squarefree);
  bisect(s, -b, b, iso.roots);
  const auto factors = squarefree_factors(p);
  for (auto& r : iso.roots) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() > 0 && SturmSequence(factors[i]).count(r.lo, r.hi) > 0) {
        r.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return iso;
}

RzCertificate certify_rz(const UPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("certify_rz: zero polynomial");
  RzCertificate cert;
  cert.isolation = isolate_roots(p);
  const int distinct = static_cast<int>(cert.isolation.roots.size());
  cert.real_rooted = distinct == std::max(cert.isolation.squarefree.degree(), 0);
  cert.all_simple = cert.isolation.squarefree.degree() == p.degree();
  if (distinct == 0) {
    cert.all_nonpositive = true;
  } else {
    const SturmSequence s(cert.isolation.squarefree);
    cert.all_nonpositive = s.count(0, cauchy_bound(cert.isolation.squarefree)) == 0;
  }
  return cert;
}

RzCertificate certify_rz(const Polynomial& p) { return certify_rz(UPoly::from(p)); }

// --- relations -----------------------------------------------------------------

std::string_view relation_name(Relation r) {
  switch (r) {
  case Relation::Interlace:
    return "interlace";
  case Relation::AlternatesLeft:
    return "alternates-left";
  case Relation::Precede:
    return "precede";
  }
  return "?";
}

namespace {

/// Orders one root of p against one root of q. Intervals are refined in place.
class RootComparator {
public:
  RootComparator(const RootIsolation& p, const RootIsolation& q)
      : sp_(p.squarefree), sq_(q.squarefree), common_(gcd(p.squarefree, q.squarefree)), pr_(p.roots),
        qr_(q.roots) {}

  /// -1, 0 or 1 as root i of p is below, equal to or above root j of q.
  int compare(std::size_t i, std::size_t j) {
    RootInterval& a = pr_[i];
    RootInterval& b = qr_[j];
    for (;;) {
      if (a.hi <= b.lo)
        return -1;
      if (b.hi <= a.lo)
        return 1;
      if (common_.degree() > 0) {
        const Rational lo = std::max(a.lo, b.lo);
        const Rational hi = std::min(a.hi, b.hi);
        if (SturmSequence(common_).count(lo, hi) > 0)
          return 0;
      }
      halve(sp_, a);
      halve(sq_, b);
    }
  }

private:
  SturmSequence sp_;
  SturmSequence sq_;
  UPoly common_;
  std::vector<RootInterval> pr_;
  std::vector<RootInterval> qr_;
};

std::vector<std::size_t> with_multiplicity(const RootIsolation& iso) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < iso.roots.size(); ++i)
    for (int m = 0; m < iso.roots[i].multiplicity; ++m)
      out.push_back(i);
  return out;
}

} // namespace

RelationReport check_relation(const UPoly& p, const UPoly& q, Relation relation) {
  RelationReport report;
  report.relation = relation;
  const int dp = p.degree(), dq = q.degree();
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("check_relation: zero polynomial");

  Relation resolved = relation;
  if (relation == Relation::Precede) {
    if (dp == 0 && dq <= 1) {
      report.resolved = dq == 1 ? Relation::Interlace : Relation::AlternatesLeft;
      report.verdict = true;
      report.detail = "constant precedes a polynomial of degree at most 1";
      return report;
    }
    if (dq == dp + 1)
      resolved = Relation::Interlace;
    else if (dq == dp)
      resolved = Relation::AlternatesLeft;
    else
      throw std::invalid_argument("check_relation: degrees " + std::to_string(dp) + " and " + std::to_string(dq) +
                                  " admit neither interlace nor alternates-left");
  } else if (relation == Relation::Interlace && dq != dp + 1) {
    throw std::invalid_argument("check_relation: interlace needs deg q = deg p + 1");
  } else if (relation == Relation::AlternatesLeft && dq != dp) {
    throw std::invalid_argument("check_relation: alternates-left needs deg p = deg q");
  }
  report.resolved = resolved;

  const RzCertificate cp = certify_rz(p), cq = certify_rz(q);
  if (!cp.real_rooted || !cq.real_rooted) {
    report.detail = std::string(!cp.real_rooted ? "p" : "q") + " is not real-rooted";
    return report;
  }

  // The defining chain, as (is_p, index into the multiset of roots).
  const auto xi = with_multiplicity(cp.isolation);
  const auto theta = with_multiplicity(cq.isolation);
  std::vector<std::pair<bool, std::size_t>> chain;
  if (resolved == Relation::Interlace) {
    for (std::size_t i = 0; i < theta.size(); ++i) {
      chain.emplace_back(false, i);
      if (i < xi.size())
        chain.emplace_back(true, i);
    }
  } else {
    for (std::size_t i = 0; i < xi.size(); ++i) {
      chain.emplace_back(true, i);
      chain.emplace_back(false, i);
    }
  }

  RootComparator cmp(cp.isolation, cq.isolation);
  auto label = [](const std::pair<bool, std::size_t>& e) {
    return std::string(e.first ? "p" : "q") + std::to_string(e.second + 1);
  };
  report.verdict = true;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (k == 0) {
      report.detail = label(chain[k]);
      continue;
    }
    const auto& prev = chain[k - 1];
    const auto& cur = chain[k];
    // Consecutive entries always come from different polynomials.
    const int c = prev.first ? cmp.compare(xi[prev.second], theta[cur.second])
                             : -cmp.compare(xi[cur.second], theta[prev.second]);
    report.detail += c < 0 ? " < " : c == 0 ? " = " : " > ";
    report.detail += label(cur);
    if (c > 0)
      report.verdict = false;
  }
  return report;
}

RelationReport check_relation(const Polynomial& p, const Polynomial& q, Relation relation) {
  return check_relation(UPoly::from(p), UPoly::from(q), relation);
}

// --- suites --------------------------------------------------------------------

int default_root_n_max(std::string_view suite) {
  if (suite == "rz-family")
    return 25;
  if (suite == "lemma-chow" || suite == "theorem-interlace")
    return 20;
  if (suite == "corollary-sxq")
    return 15;
  throw std::invalid_argument("unknown root suite: " + std::string(suite));
}

namespace {

Polynomial row_of(Family f, int n) { return triangle(f, n).row(n); }

std::optional<std::string> rz_failure(const std::string& name, const Polynomial& poly) {
  const UPoly p = UPoly::from(poly);
  const RzCertificate c = certify_rz(p);
  if (!c.real_rooted)
    return name + " = " + poly.to_string() + " is not real-rooted";
  if (!c.all_nonpositive || p(0) == 0)
    return name + " = " + poly.to_string() + " has a root in [0, oo)";
  if (!c.all_simple)
    return name + " = " + poly.to_string() + " has a multiple root";
  return std::nullopt;
}

std::optional<std::string> relation_failure(const std::string& name, const Polynomial& p, const Polynomial& q,
                                            Relation r) {
  try {
    const RelationReport rep = check_relation(p, q, r);
    if (!rep.verdict)
      return name + " fails (" + std::string(relation_name(rep.resolved)) + "): " + rep.detail;
  } catch (const std::invalid_argument& e) {
    return name + ": " + e.what();
  }
  return std::nullopt;
}

} // namespace

IdentityReport verify_roots(std::string_view suite, int n_max) {
  if (suite == "rz-family") {
    return check_range("rz-family", 2, n_max, [](int n) -> std::optional<std::string> {
      const std::string tag = "_" + std::to_string(n);
      for (Family f : {Family::S, Family::P, Family::Pplus, Family::Pminus})
        if (auto fail = rz_failure(std::string(family_name(f)) + tag, row_of(f, n)))
          return fail;
      return std::nullopt;
    });
  }
  if (suite == "lemma-chow") {
    return check_range("lemma-chow", 2, n_max, [](int n) -> std::optional<std::string> {
      const Triangle s = triangle(Family::S, n + 1);
      return relation_failure("S_" + std::to_string(n) + " < S_" + std::to_string(n + 1), s.row(n), s.row(n + 1),
                              Relation::Precede);
    });
  }
  if (suite == "theorem-interlace") {
    return check_range("theorem-interlace", 2, n_max, [](int n) -> std::optional<std::string> {
      const std::string a = std::to_string(n + 1), b = std::to_string(n);
      const Polynomial s = row_of(Family::S, n);
      const Polynomial p = row_of(Family::P, n + 1);
      const Polynomial pp = row_of(Family::Pplus, n + 1);
      const Polynomial pm = row_of(Family::Pminus, n + 1);
      for (auto [name, poly] : {std::pair{"P_", p}, std::pair{"P+_", pp}, std::pair{"P-_", pm}})
        if (auto fail = rz_failure(name + a, poly))
          return fail;
      if (auto fail = relation_failure("P_" + a + " << S_" + b, p, s, Relation::AlternatesLeft))
        return fail;
      if (auto fail = relation_failure("P+_" + a + " < S_" + b, pp, s, Relation::Precede))
        return fail;
      return relation_failure("S_" + b + " << P-_" + a, s, pm, Relation::AlternatesLeft);
    });
  }
  if (suite == "corollary-sxq") {
    return check_range("corollary-sxq", 2, n_max, [](int n) -> std::optional<std::string> {
      const Polynomial row = row_of(Family::Sxq, n);
      for (const Rational& q : {Rational(Rational(1) / 2), Rational(1), Rational(2), Rational(3)})
        if (auto fail = rz_failure("S_" + std::to_string(n) + "(x," + q.get_str() + ")", row.eval_at(Var::q, q)))
          return fail;
      return std::nullopt;
    });
  }
  throw std::invalid_argument("unknown root suite: " + std::string(suite));
}

} // namespace simsun
