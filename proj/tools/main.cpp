#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simsun/bijection.hpp"
#include "simsun/registry.hpp"
#include "simsun/render.hpp"
#include "simsun/rootcheck.hpp"
#include "simsun/series.hpp"
#include "simsun/simsun.hpp"
#include "simsun/triangles.hpp"

using namespace simsun;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

constexpr int kTriangleMax = 60;

/// Signals a bad argument detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::optional<std::string> fault;

  std::string target;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> order;
  std::optional<std::string> perm;
  std::optional<std::string> q;
  std::string family;
  bool inverse = false;
};

int emit(const std::string& text) {
  std::cout << text;
  return kExitOk;
}

int emit_reports(std::string_view command, const ordered_json& params, const std::vector<IdentityReport>& reports,
                 Format f) {
  std::cout << render_reports(command, params, reports, f);
  for (const auto& r : reports)
    if (!r.passed())
      return kExitViolation;
  return kExitOk;
}

int run_triangle(const Options& o, Format f) {
  const auto family = parse_family(o.target);
  if (!family)
    throw UsageError("unknown family '" + o.target + "'");
  const int n = o.n.value_or(10);
  if (n < 0 || n > kTriangleMax)
    throw UsageError("--n must lie in [0, " + std::to_string(kTriangleMax) + "]");
  Triangle t = triangle(*family, std::max(n, 1));
  while (t.last_row() > n)
    t.rows.pop_back();
  return emit(render_triangle(t, f));
}

int run_enumerate(const Options& o, Format f) {
  if (!o.n)
    throw UsageError("enumerate requires --n");
  const Listing listing = enumerate_listing(o.target, *o.n);
  return emit(render_listing("enumerate", {{"class", o.target}, {"n", *o.n}}, listing, f));
}

int run_verify(const Options& o, Format f) {
  ordered_json params = {{"id", o.target}};
  if (o.n_max)
    params["n_max"] = *o.n_max;
  if (o.target == "all")
    return emit_reports("verify", params, run_all(o.n_max), f);
  const auto entry = find_verify(o.target);
  if (!entry)
    throw UsageError("unknown id '" + o.target + "'");
  return emit_reports("verify", params, {run_verify(*entry, o.n_max.value_or(entry->default_bound))}, f);
}

int run_bijection(const Options& o, Format f) {
  if (o.target != "phi" && o.target != "psi")
    throw UsageError("bijection must be phi or psi");
  if (o.perm.has_value() == o.n.has_value())
    throw UsageError("bijection needs exactly one of --perm and --n");
  if (o.n) {
    const auto entry = find_verify(o.target);
    ordered_json params = {{"map", o.target}, {"n", *o.n}};
    return emit_reports("bijection", params, {run_verify(*entry, *o.n)}, f);
  }
  const std::string& text = *o.perm;
  ordered_json params = {{"map", o.target}, {"perm", text}, {"inverse", o.inverse}};
  Listing listing;
  listing.columns = {"role", "object", "labeled"};
  listing.show_count = false;
  if (o.target == "phi") {
    const Permutation p = Permutation::parse(text);
    if (o.inverse) {
      const Permutation src = phi_inverse(p);
      listing.rows.push_back({"source", p.to_string(), label_peak(p).to_string()});
      listing.rows.push_back({"image", src.to_string(), label_first(src).to_string()});
    } else {
      const PhiImage img = phi_forward(p);
      listing.rows.push_back({"source", p.to_string(), label_first(p).to_string()});
      for (const Permutation& t : img.image)
        listing.rows.push_back({"image", t.to_string(), label_peak(t).to_string()});
    }
  } else if (!text.empty() && text.front() == '(') {
    const CycleDecomposition c = CycleDecomposition::parse(text);
    const Permutation p = psi_inverse(c);
    listing.rows.push_back({"source", c.to_string(), label_second(c).to_string()});
    listing.rows.push_back({"image", p.to_string(), label_first(p).to_string()});
  } else {
    const Permutation p = Permutation::parse(text);
    if (o.inverse) {
      const CycleDecomposition c = to_cycles(p);
      const Permutation src = psi_inverse(c);
      listing.rows.push_back({"source", c.to_string(), label_second(c).to_string()});
      listing.rows.push_back({"image", src.to_string(), label_first(src).to_string()});
    } else {
      const CycleDecomposition c = psi_forward(p);
      listing.rows.push_back({"source", p.to_string(), label_first(p).to_string()});
      listing.rows.push_back({"image", c.to_string(), label_second(c).to_string()});
    }
  }
  return emit(render_listing("bijection", params, listing, f));
}

int run_certify(const Options& o, Format f) {
  const auto family = parse_family(o.family);
  if (!family)
    throw UsageError("unknown family '" + o.family + "'");
  if (!o.n)
    throw UsageError("certify requires --n");
  if (*o.n < 0 || *o.n > kTriangleMax)
    throw UsageError("--n must lie in [0, " + std::to_string(kTriangleMax) + "]");
  Polynomial row = triangle(*family, std::max(*o.n, 1)).row(*o.n);
  ordered_json params = {{"family", o.family}, {"n", *o.n}};
  if (o.q) {
    Rational q;
    try {
      q = Rational(*o.q);
      q.canonicalize();
    } catch (const std::invalid_argument&) {
      throw UsageError("--q must be a rational number");
    }
    row = row.eval_at(Var::q, q);
    params["q"] = q.get_str();
  }
  if (!row.is_univariate_in(Var::x))
    throw UsageError("certify needs a polynomial in x; pass --q for " + o.family);
  if (row.is_zero())
    throw UsageError("row is the zero polynomial");
  const RzCertificate cert = certify_rz(row);
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  Listing listing;
  listing.columns = {"field", "value"};
  listing.show_count = false;
  listing.rows.push_back({"polynomial", row.to_string()});
  listing.rows.push_back({"degree", std::to_string(row.degree())});
  listing.rows.push_back({"real_rooted", yn(cert.real_rooted)});
  listing.rows.push_back({"all_nonpositive", yn(cert.all_nonpositive)});
  listing.rows.push_back({"all_simple", yn(cert.all_simple)});
  for (std::size_t i = 0; i < cert.isolation.roots.size(); ++i) {
    const RootInterval& r = cert.isolation.roots[i];
    listing.rows.push_back({"root " + std::to_string(i + 1),
                            "(" + r.lo.get_str() + ", " + r.hi.get_str() + "] x" + std::to_string(r.multiplicity)});
  }
  return emit(render_listing("roots", params, listing, f));
}

int run_roots(const Options& o, Format f) {
  if (o.target == "certify")
    return run_certify(o, f);
  ordered_json params = {{"suite", o.target}};
  if (o.n_max)
    params["n_max"] = *o.n_max;
  std::vector<IdentityReport> reports;
  for (std::string_view suite : kRootSuites) {
    if (o.target != "all" && o.target != suite)
      continue;
    const auto entry = find_verify(suite);
    const int bound = o.n_max ? (o.target == "all" ? std::min(*o.n_max, entry->max_bound) : *o.n_max)
                              : entry->default_bound;
    reports.push_back(run_verify(*entry, bound));
  }
  if (reports.empty())
    throw UsageError("unknown root suite '" + o.target + "'");
  return emit_reports("roots", params, reports, f);
}

int run_series(const Options& o, Format f) {
  const int order = o.order.value_or(kDefaultSeriesOrder);
  return emit(render_series(o.target, build_series(o.target, order), f));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with simsun permutations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--inject-fault", o.fault)->group("");

  auto* tri = app.add_subcommand("triangle", "Print rows 0..n of a polynomial family");
  tri->add_option("family", o.target, "S, What, W, R, T, Pplus, Pminus, P, A, Sxq, Sxyq, D")->required();
  tri->add_option("--n", o.n, "Last row");

  auto* en = app.add_subcommand("enumerate", "List a permutation class with statistics");
  en->add_option("class", o.target, "simsun1, simsun2, snakes, alternating, cud")->required();
  en->add_option("--n", o.n, "Size");

  auto* ver = app.add_subcommand("verify", "Check an identity, series id, root suite or bijection");
  ver->add_option("id", o.target, "Registry id or 'all'")->required();
  ver->add_option("--n-max", o.n_max, "Largest n (truncation order for series ids)");

  auto* bij = app.add_subcommand("bijection", "Apply phi or psi, or verify them exhaustively");
  bij->add_option("map", o.target, "phi or psi")->required();
  bij->add_option("--perm", o.perm, "Word (\"3412\" or \"10,2,...\") or cycles \"(1,4,3)(2)\"");
  bij->add_option("--n", o.n, "Verify every size up to n");
  bij->add_flag("--inverse", o.inverse, "Apply the inverse map");

  auto* roots = app.add_subcommand("roots", "Run a root suite, or certify one row");
  roots->add_option("suite", o.target, "rz-family, lemma-chow, theorem-interlace, corollary-sxq, all, certify")
      ->required();
  roots->add_option("--n-max", o.n_max, "Largest n");
  roots->add_option("--family", o.family, "Family for certify");
  roots->add_option("--n", o.n, "Row for certify");
  roots->add_option("--q", o.q, "Rational value of q for Sxq");

  auto* ser = app.add_subcommand("series", "Print n!·[z^n] of a generating function");
  ser->add_option("name", o.target, "Sxz, What, Sxz-from-What, springer, Sxqz, one-minus-sin-negq, trivariate")
      ->required();
  ser->add_option("--order", o.order, "Truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format f = *parse_format(o.format);
    if (o.fault) {
      const auto family = parse_family(*o.fault);
      if (!family)
        throw UsageError("unknown family '" + *o.fault + "'");
      set_injected_fault(*family);
    }
    if (tri->parsed())
      return run_triangle(o, f);
    if (en->parsed())
      return run_enumerate(o, f);
    if (ver->parsed())
      return run_verify(o, f);
    if (bij->parsed())
      return run_bijection(o, f);
    if (roots->parsed())
      return run_roots(o, f);
    return run_series(o, f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IdentityViolation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
