#include "simsun/identities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simsun/numbers.hpp"
#include "simsun/simsun.hpp"
#include "simsun/triangles.hpp"

namespace simsun {

IdentityReport check_range(std::string id, int n_min, int n_max, const RangeCheck& check) {
  IdentityReport report{std::move(id), n_min, n_max, {}, std::nullopt};
  for (int n = n_min; n <= n_max; ++n) {
    std::optional<std::string> fail;
    try {
      fail = check(n);
    } catch (const IdentityViolation& e) {
      fail = e.what();
    } catch (const std::exception& e) {
      // A precondition broken by the data under test (e.g. a degree bound) is a failure too.
      fail = std::string("computation failed: ") + e.what();
    }
    report.verdicts.emplace_back(n, !fail);
    if (fail) {
      report.counterexample = "n=" + std::to_string(n) + ": " + *fail;
      break;
    }
  }
  return report;
}

namespace {

const Polynomial kX = Polynomial::variable(Var::x);

std::optional<std::string> differ(const std::string& what, const Polynomial& got, const Polynomial& want) {
  if (got == want)
    return std::nullopt;
  return what + ": " + got.to_string() + " != " + want.to_string();
}

std::optional<std::string> differ(const std::string& what, const Integer& got, const Integer& want) {
  if (got == want)
    return std::nullopt;
  return what + ": " + got.get_str() + " != " + want.get_str();
}

std::string at(std::string_view name, int n, int k) {
  return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

Polynomial at_x_squared(const Polynomial& p) { return p.substitute(Var::x, kX * kX); }

Integer count_visits(const std::function<void(const std::function<void(std::span<const int>)>&)>& walk) {
  unsigned long long count = 0;
  walk([&](std::span<const int>) { ++count; });
  return Integer(std::to_string(count));
}

Polynomial stat_poly(PermClass cls, std::initializer_list<Stat> stats, int n) {
  const std::vector<Stat> s(stats);
  return distribution(cls, s, n);
}

/// Σ over S_n of x^{altruns}.
Polynomial run_distribution(int n) {
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_permutation(n, [&](std::span<const int> w) { ++counts[static_cast<std::size_t>(alternating_runs(w))]; });
  Polynomial out;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] > 0)
      out += Polynomial::monomial(Rational(Integer(std::to_string(counts[k]))), {static_cast<unsigned>(k), 0, 0});
  return out;
}

std::vector<std::vector<int>> collect(const std::function<void(const std::function<void(std::span<const int>)>&)>& walk) {
  std::vector<std::vector<int>> out;
  walk([&](std::span<const int> w) { out.emplace_back(w.begin(), w.end()); });
  std::sort(out.begin(), out.end());
  return out;
}

using Check = std::function<IdentityReport(const IdentityInfo&, int)>;

struct Entry {
  IdentityInfo info;
  Check run;
};

IdentityReport ranged(const IdentityInfo& info, int n_max, const RangeCheck& check) {
  return check_range(std::string(info.id), info.n_min, n_max, check);
}

/// Distribution over a class vs. a triangle row, per n.
Check enum_vs_triangle(Family family, PermClass cls, Stat stat) {
  return [=](const IdentityInfo& info, int n_max) {
    const Triangle t = triangle(family, n_max);
    return ranged(info, n_max, [&, family, cls, stat](int n) {
      return differ(std::string(family_name(family)) + "_" + std::to_string(n), stat_poly(cls, {stat}, n), t.row(n));
    });
  };
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> e;
    const int kPoly = 60;

    e.push_back({{"I-eq2", 0, 12, kPoly, "S(n,k) recurrence agrees with the derivative form"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max + 1);
                   return ranged(info, n_max, [&](int n) {
                     const Polynomial& sn = s.row(n);
                     const Polynomial rhs = (1 + n * kX) * sn + kX * (1 - 2 * kX) * sn.derivative();
                     return differ("S_" + std::to_string(n + 1), s.row(n + 1), rhs);
                   });
                 }});

    e.push_back({{"I-conv5", 0, 12, kPoly, "S_n(x) as a binomial convolution of What_k(2x)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   const Triangle w = triangle(Family::What, n_max);
                   std::vector<Polynomial> w2;
                   for (int k = 0; k <= n_max; ++k)
                     w2.push_back(w.row(k).substitute(Var::x, 2 * kX));
                   return ranged(info, n_max, [&](int n) {
                     Polynomial sum;
                     for (int k = 0; k <= n; ++k)
                       sum += Polynomial(binomial(n, k)) * w2[static_cast<std::size_t>(k)] *
                              w2[static_cast<std::size_t>(n - k)];
                     sum.scale(Rational(1) / Rational(pow2(n)));
                     return differ("S_" + std::to_string(n), s.row(n), sum);
                   });
                 }});

    e.push_back({{"I-eq8", 2, 12, kPoly, "R_n through W_n and S_{n-1} by Moebius composition"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle r = triangle(Family::R, n_max);
                   const Triangle w = triangle(Family::W, n_max);
                   const Triangle s = triangle(Family::S, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     Polynomial via_w = kX * mobius_compose(w.row(n), n - 2, 2);
                     via_w.scale(Rational(1) / Rational(pow2(n - 2)));
                     const Polynomial via_s = 2 * kX * mobius_compose(s.row(n - 1), n - 2, 1);
                     const std::string name = "R_" + std::to_string(n);
                     if (auto fail = differ(name + " via W", r.row(n), via_w))
                       return fail;
                     return differ(name + " via S", r.row(n), via_s);
                   });
                 }});

    e.push_back({{"I-eq9", 1, 12, kPoly, "W(n+1,k) = 2^(n-k) S(n,k), with peak counts over S_(n+1) for n+1 <= 10"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle w = triangle(Family::W, n_max + 1);
                   const Triangle s = triangle(Family::S, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     Polynomial want;
                     for (int k = 0; k <= n / 2; ++k)
                       want += Polynomial::monomial(Rational(pow2(n - k) * s.entry(n, k)),
                                                    {static_cast<unsigned>(k), 0, 0});
                     if (auto fail = differ("W_" + std::to_string(n + 1), w.row(n + 1), want))
                       return fail;
                     if (n + 1 <= 10)
                       return differ("pk over S_" + std::to_string(n + 1), stat_poly(PermClass::All, {Stat::pk}, n + 1),
                                     want);
                     return std::nullopt;
                   });
                 }});

    e.push_back({{"I-lemma2", 1, 12, kPoly, "P+(n+1,k) = (n-2k)S(n,k) and P-(n+1,k) = (1+k)S(n,k)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   const Triangle pp = triangle(Family::Pplus, n_max + 1);
                   const Triangle pm = triangle(Family::Pminus, n_max + 1);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     for (int k = 0; k <= n / 2 + 1; ++k) {
                       if (auto fail = differ(at("P+", n + 1, k), pp.entry(n + 1, k), (n - 2 * k) * s.entry(n, k)))
                         return fail;
                       if (auto fail = differ(at("P-", n + 1, k), pm.entry(n + 1, k), (1 + k) * s.entry(n, k)))
                         return fail;
                     }
                     const std::string tag = "_" + std::to_string(n + 1);
                     if (auto fail = differ("P+" + tag, pp.row(n + 1), closed_form(ClosedForm::PplusFromS, n)))
                       return fail;
                     return differ("P-" + tag, pm.row(n + 1), closed_form(ClosedForm::PminusFromS, n));
                   });
                 }});

    e.push_back({{"I-eq18", 1, 12, kPoly, "P(n+1,k) = (n+1-k) S(n,k)"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   const Triangle p = triangle(Family::P, n_max + 1);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     for (int k = 0; k <= n / 2 + 1; ++k)
                       if (auto fail = differ(at("P", n + 1, k), p.entry(n + 1, k), (n + 1 - k) * s.entry(n, k)))
                         return fail;
                     return std::nullopt;
                   });
                 }});

    e.push_back({{"I-eq19", 1, 12, kPoly, "P_(n+1) = (n+1) S_n - x S_n'"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle p = triangle(Family::P, n_max + 1);
                   return ranged(info, n_max, [&](int n) {
                     return differ("P_" + std::to_string(n + 1), p.row(n + 1), closed_form(ClosedForm::PFromS, n));
                   });
                 }});

    e.push_back({{"I-eq20", 1, 12, kPoly, "P(n,k) recurrence in cleared-denominator form"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle p = triangle(Family::P, n_max + 1);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     for (int k = 0; k <= n / 2; ++k) {
                       const Integer lhs = (n - k) * p.entry(n + 1, k);
                       const Integer rhs =
                           (k + 1) * (n - k + 1) * p.entry(n, k) + (n - 2 * k + 1) * (n - k) * p.entry(n, k - 1);
                       if (auto fail = differ("(n-k)" + at("P", n + 1, k), lhs, rhs))
                         return fail;
                     }
                     return std::nullopt;
                   });
                 }});

    e.push_back({{"I-pn0", 1, 12, kPoly, "P(n,0) = n and P(n,1) = (n-1)(2^(n-1) - n)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle p = triangle(Family::P, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     if (auto fail = differ(at("P", n, 0), p.entry(n, 0), Integer(n)))
                       return fail;
                     return differ(at("P", n, 1), p.entry(n, 1), (n - 1) * (pow2(n - 1) - n));
                   });
                 }});

    e.push_back({{"I-spt", 1, 12, kPoly, "S(n,k) = T(n,2k) + T(n,2k+1) and P(n,k) = T(n,2k+1) + T(n,2k+2)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   const Triangle p = triangle(Family::P, n_max);
                   const Triangle t = triangle(Family::T, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     for (int k = 0; k <= n / 2 + 1; ++k) {
                       if (auto fail = differ(at("S", n, k), s.entry(n, k), t.entry(n, 2 * k) + t.entry(n, 2 * k + 1)))
                         return fail;
                       if (auto fail =
                               differ(at("P", n, k), p.entry(n, k), t.entry(n, 2 * k + 1) + t.entry(n, 2 * k + 2)))
                         return fail;
                     }
                     return std::nullopt;
                   });
                 }});

    e.push_back({{"I-eq11", 1, 12, kPoly, "(1+x) T_n(x) = x S_n(x^2) + x^2 P_n(x^2)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   const Triangle p = triangle(Family::P, n_max);
                   const Triangle t = triangle(Family::T, n_max);
                   return ranged(info, n_max, [&](int n) {
                     return differ("(1+x)T_" + std::to_string(n), (1 + kX) * t.row(n),
                                   kX * at_x_squared(s.row(n)) + kX * kX * at_x_squared(p.row(n)));
                   });
                 }});

    e.push_back({{"I-tformula", 0, 12, kPoly, "T_(n+1) from S_n(x^2) and S_n'(x^2)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle t = triangle(Family::T, n_max + 1);
                   return ranged(info, n_max, [&](int n) {
                     return differ("T_" + std::to_string(n + 1), t.row(n + 1), closed_form(ClosedForm::TFromS, n));
                   });
                 }});

    e.push_back({{"I-corner", 1, 12, 12, "T(n,n) counts alternating simsun words; equals S(2m,m) or P(2m+1,m)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   const Triangle p = triangle(Family::P, n_max);
                   const Triangle t = triangle(Family::T, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     unsigned long long alt = 0;
                     for_each_alternating(n, [&](std::span<const int> w) { alt += is_simsun_first(w) ? 1 : 0; });
                     const Integer count(std::to_string(alt));
                     if (auto fail = differ(at("T", n, n), t.entry(n, n), count))
                       return fail;
                     const int m = n / 2;
                     if (n % 2 == 0)
                       return differ(at("S", n, m), s.entry(n, m), count);
                     return differ(at("P", n, m), p.entry(n, m), count);
                   });
                 }});

    e.push_back({{"I-sundaram", 0, 12, kPoly, "a_(k+1)(n+2) = S(n,k)"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle a = triangle(Family::A, n_max + 2);
                   const Triangle s = triangle(Family::S, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     if (auto fail = differ(at("a", n + 2, 0), a.entry(n + 2, 0), Integer(0)))
                       return fail;
                     for (int k = 0; k <= n / 2 + 1; ++k)
                       if (auto fail = differ(at("a", n + 2, k + 1), a.entry(n + 2, k + 1), s.entry(n, k)))
                         return fail;
                     return std::nullopt;
                   });
                 }});

    e.push_back({{"I-euler", 0, 10, 12, "E_(n+1) as a convolution of Springer numbers What_k(2)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle w = triangle(Family::What, n_max);
                   std::vector<Integer> springer;
                   for (int k = 0; k <= n_max; ++k)
                     springer.push_back(w.row(k).eval_at(Var::x, 2).evaluate_at_one().get_num());
                   return ranged(info, n_max, [&](int n) {
                     Integer sum = 0;
                     for (int k = 0; k <= n; ++k)
                       sum += binomial(n, k) * springer[static_cast<std::size_t>(k)] *
                              springer[static_cast<std::size_t>(n - k)];
                     const Integer euler = class_size(PermClass::Alt, n + 1);
                     return differ("2^n E_" + std::to_string(n + 1), sum, pow2(n) * euler);
                   });
                 }});

    e.push_back({{"I-trivar", 0, 9, 10, "S_n(x,y,q) binomial formula vs. (exc, cyc, fix) over SS_n"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle t = triangle(Family::Sxyq, n_max);
                   return ranged(info, n_max, [&](int n) {
                     return differ("S_" + std::to_string(n) + "(x,y,q)",
                                   stat_poly(PermClass::SS, {Stat::exc, Stat::cyc, Stat::fix}, n), t.row(n));
                   });
                 }});

    e.push_back({{"I-stirling", 1, 15, 40, "S_n(x) rebuilt from the Stirling-number sum"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   return ranged(info, n_max,
                                 [&](int n) { return differ("S_" + std::to_string(n), s_from_stirling(n), s.row(n)); });
                 }});

    e.push_back({{"I-sxq-minus1", 1, 20, kPoly, "closed form of S_n(x,-1)"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle t = triangle(Family::Sxq, n_max);
                   return ranged(info, n_max, [&](int n) {
                     return differ("S_" + std::to_string(n) + "(x,-1)", t.row(n).eval_at(Var::q, -1),
                                   closed_form(ClosedForm::SxqAtMinusOne, n));
                   });
                 }});

    e.push_back({{"I-deg", 1, 12, kPoly, "degree bounds, nonnegativity, a_i(n) = 0 for 2i > n, S_n(x,1) = S_n(x)"},
                 [](const IdentityInfo& info, int n_max) {
                   std::vector<Triangle> all;
                   for (Family f : kAllFamilies)
                     all.push_back(triangle(f, n_max));
                   auto of = [&](Family f) -> const Triangle& {
                     return all[static_cast<std::size_t>(std::find(std::begin(kAllFamilies), std::end(kAllFamilies), f) -
                                                         std::begin(kAllFamilies))];
                   };
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     for (const Triangle& t : all) {
                       if (n < t.first_row)
                         continue;
                       for (const auto& [e, c] : t.row(n).terms())
                         if (c < 0 || c.get_den() != 1)
                           return std::string(family_name(t.family)) + "_" + std::to_string(n) +
                                  " has coefficient " + c.get_str();
                     }
                     auto degree_is = [&](Family f, int want) -> std::optional<std::string> {
                       const int got = of(f).row(n).degree();
                       if (got == want)
                         return std::nullopt;
                       return "deg " + std::string(family_name(f)) + "_" + std::to_string(n) + " = " +
                              std::to_string(got) + ", expected " + std::to_string(want);
                     };
                     if (auto fail = degree_is(Family::S, n / 2))
                       return fail;
                     if (auto fail = differ(at("S", n, 0), of(Family::S).entry(n, 0), Integer(1)))
                       return fail;
                     if (n >= 2) {
                       if (auto fail = degree_is(Family::Pplus, (n - 2) / 2))
                         return fail;
                       if (auto fail = degree_is(Family::P, (n - 1) / 2))
                         return fail;
                       if (auto fail = degree_is(Family::Pminus, (n - 1) / 2))
                         return fail;
                     }
                     if (of(Family::A).row(n).degree() > n / 2)
                       return "a_i(" + std::to_string(n) + ") != 0 for some 2i > n";
                     return differ("S_" + std::to_string(n) + "(x,1)", of(Family::Sxq).row(n).eval_at(Var::q, 1),
                                   of(Family::S).row(n));
                   });
                 }});

    // Enumeration-backed checks.
    e.push_back({{"I-enum-S", 0, 12, 12, "des over RS_n vs. S_n"}, enum_vs_triangle(Family::S, PermClass::RS, Stat::des)});
    e.push_back(
        {{"I-enum-lpk", 0, 10, 12, "lpk over RS_n vs. S_n"}, enum_vs_triangle(Family::S, PermClass::RS, Stat::lpk)});
    e.push_back({{"I-enum-T", 0, 12, 12, "uprun over RS_n vs. T_n"},
                 enum_vs_triangle(Family::T, PermClass::RS, Stat::uprun)});
    e.push_back({{"I-enum-P", 1, 12, 12, "pk over RS_n vs. P_n"}, enum_vs_triangle(Family::P, PermClass::RS, Stat::pk)});
    e.push_back({{"I-enum-Pplus", 1, 12, 12, "pk over RS+_n vs. P+_n"},
                 enum_vs_triangle(Family::Pplus, PermClass::RSplus, Stat::pk)});
    e.push_back({{"I-enum-Pminus", 1, 12, 12, "pk over RS-_n vs. P-_n"},
                 enum_vs_triangle(Family::Pminus, PermClass::RSminus, Stat::pk)});
    e.push_back(
        {{"I-enum-W", 1, 10, 10, "pk over S_n vs. W_n"}, enum_vs_triangle(Family::W, PermClass::All, Stat::pk)});
    e.push_back({{"I-enum-What", 0, 10, 10, "lpk over S_n vs. What_n"},
                 enum_vs_triangle(Family::What, PermClass::All, Stat::lpk)});

    e.push_back({{"I-enum-R", 1, 10, 10, "alternating runs over S_n vs. R_n"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle r = triangle(Family::R, n_max);
                   return ranged(info, n_max,
                                 [&](int n) { return differ("R_" + std::to_string(n), run_distribution(n), r.row(n)); });
                 }});

    e.push_back({{"I-enum-Sxq", 0, 11, 11, "(exc, cyc) over SS_n vs. S_n(x,q)"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle t = triangle(Family::Sxq, n_max);
                   return ranged(info, n_max, [&](int n) {
                     return differ("S_" + std::to_string(n) + "(x,q)", stat_poly(PermClass::SS, {Stat::exc, Stat::cyc}, n),
                                   t.row(n));
                   });
                 }});

    e.push_back({{"I-enum-D", 0, 10, 12, "D_(n+1) vs. x times des over RS_n"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle d = triangle(Family::D, n_max + 1);
                   return ranged(info, n_max, [&](int n) {
                     return differ("D_" + std::to_string(n + 1), d.row(n + 1),
                                   kX * stat_poly(PermClass::RS, {Stat::des}, n));
                   });
                 }});

    e.push_back({{"I-card", 1, 10, 11, "|RS_n| = |SS_n| = S_n(1) = E_(n+1)"}, [](const IdentityInfo& info, int n_max) {
                   const Triangle s = triangle(Family::S, n_max);
                   return ranged(info, n_max, [&](int n) -> std::optional<std::string> {
                     const Integer euler = class_size(PermClass::Alt, n + 1);
                     const Integer rs = count_visits([n](const auto& v) { for_each_simsun_first(n, v); });
                     const Integer ss = count_visits([n](const auto& v) { for_each_simsun_second(n, v); });
                     if (auto fail = differ("|RS_" + std::to_string(n) + "|", rs, euler))
                       return fail;
                     if (auto fail = differ("|SS_" + std::to_string(n) + "|", ss, euler))
                       return fail;
                     return differ("S_" + std::to_string(n) + "(1)", s.row(n).evaluate_at_one().get_num(), euler);
                   });
                 }});

    e.push_back({{"I-filter-gen", 1, 9, 9, "membership filters agree with the insertion generators"},
                 [](const IdentityInfo& info, int n_max) {
                   return ranged(info, n_max, [](int n) -> std::optional<std::string> {
                     const auto all = collect([n](const auto& v) { for_each_permutation(n, v); });
                     std::vector<std::vector<int>> first, second;
                     for (const auto& w : all) {
                       if (is_simsun_first(w))
                         first.push_back(w);
                       if (is_simsun_second(w))
                         second.push_back(w);
                     }
                     if (collect([n](const auto& v) { for_each_simsun_first(n, v); }) != first)
                       return std::string("first kind: generator and filter disagree");
                     if (collect([n](const auto& v) { for_each_simsun_second(n, v); }) != second)
                       return std::string("second kind: generator and filter disagree");
                     return std::nullopt;
                   });
                 }});

    e.push_back({{"I-lpk-pk", 1, 10, 12, "des = lpk on RS_n; lpk = pk + 1 on RS+_n and lpk = pk on RS-_n"},
                 [](const IdentityInfo& info, int n_max) {
                   return ranged(info, n_max, [](int n) -> std::optional<std::string> {
                     std::optional<std::string> fail;
                     for_each_simsun_first(n, [&](std::span<const int> w) {
                       if (fail)
                         return;
                       const int lpk = left_peaks(w), pk = interior_peaks(w);
                       const bool plus = w.size() >= 2 && w[0] > w[1];
                       if (descents(w) != lpk || (w.size() >= 2 && lpk != pk + (plus ? 1 : 0)))
                         fail = Permutation::trusted({w.begin(), w.end()}).to_string();
                     });
                     return fail;
                   });
                 }});

    e.push_back({{"I-des-exc", 0, 10, 11, "des over RS_n equals exc over SS_n"}, [](const IdentityInfo& info, int n_max) {
                   return ranged(info, n_max, [](int n) {
                     return differ("n=" + std::to_string(n), stat_poly(PermClass::RS, {Stat::des}, n),
                                   stat_poly(PermClass::SS, {Stat::exc}, n));
                   });
                 }});

    e.push_back({{"I-cud", 1, 9, 10, "cyc over SS_n equals cyc over cycle-up-down permutations"},
                 [](const IdentityInfo& info, int n_max) {
                   return ranged(info, n_max, [](int n) {
                     return differ("n=" + std::to_string(n), stat_poly(PermClass::SS, {Stat::cyc}, n),
                                   stat_poly(PermClass::CUD, {Stat::cyc}, n));
                   });
                 }});

    e.push_back({{"I-uprun-lalt", 1, 9, 10, "uprun equals the longest alternating subsequence on S_n"},
                 [](const IdentityInfo& info, int n_max) {
                   return ranged(info, n_max, [](int n) -> std::optional<std::string> {
                     std::optional<std::string> fail;
                     for_each_permutation(n, [&](std::span<const int> w) {
                       if (!fail && up_down_runs(w) != longest_alternating_subsequence(w))
                         fail = Permutation::trusted({w.begin(), w.end()}).to_string();
                     });
                     return fail;
                   });
                 }});

    e.push_back({{"I-snake-springer", 1, 8, 9, "snakes of type B_n number What_n(2)"},
                 [](const IdentityInfo& info, int n_max) {
                   const Triangle w = triangle(Family::What, n_max);
                   return ranged(info, n_max, [&](int n) {
                     return differ("snakes of B_" + std::to_string(n), class_size(PermClass::Snake, n),
                                   w.row(n).eval_at(Var::x, 2).evaluate_at_one().get_num());
                   });
                 }});
    return e;
  }();
  return table;
}

} // namespace

std::span<const IdentityInfo> identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : entries())
      out.push_back(e.info);
    return out;
  }();
  return infos;
}

IdentityReport verify_identity(std::string_view id, int n_max) {
  for (const auto& e : entries()) {
    if (e.info.id != id)
      continue;
    if (n_max > e.info.max_n_max)
      throw std::invalid_argument(std::string(id) + ": n_max is capped at " + std::to_string(e.info.max_n_max));
    return e.run(e.info, n_max);
  }
  throw std::invalid_argument("unknown identity: " + std::string(id));
}

} // namespace simsun
