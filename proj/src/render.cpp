#include "simsun/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "simsun/simsun.hpp"

namespace simsun {

using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text")
    return Format::Text;
  if (name == "csv")
    return Format::Csv;
  if (name == "json")
    return Format::Json;
  return std::nullopt;
}

namespace {

std::string exponent_key(const Exponents& e) {
  return std::to_string(e[0]) + ":" + std::to_string(e[1]) + ":" + std::to_string(e[2]);
}

// One (k, value) pair per coefficient; univariate rows list every x-degree, zeros included.
std::vector<std::pair<std::string, std::string>> csv_cells(const Polynomial& p, bool multivariate) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!multivariate && p.is_univariate_in(Var::x)) {
    const auto c = p.coefficients(Var::x);
    for (std::size_t k = 0; k < c.size(); ++k)
      out.emplace_back(std::to_string(k), c[k].get_str());
    if (c.empty())
      out.emplace_back("0", "0");
    return out;
  }
  for (const auto& [e, c] : p.terms())
    out.emplace_back(exponent_key(e), c.get_str());
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string rows_text(std::string_view label, int first, const std::vector<Polynomial>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i)
    os << label << "_" << first + static_cast<int>(i) << " = " << rows[i].to_string() << "\n";
  return os.str();
}

std::string rows_csv(std::string_view head, std::string_view label, int first, const std::vector<Polynomial>& rows,
                     bool multivariate) {
  std::ostringstream os;
  os << head << ",n,k,value\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [k, v] : csv_cells(rows[i], multivariate))
      os << label << "," << first + static_cast<int>(i) << "," << k << "," << v << "\n";
  return os.str();
}

ordered_json rows_json(int first, const std::vector<Polynomial>& rows) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.push_back({{"n", first + static_cast<int>(i)}, {"coefficients", polynomial_json(rows[i])}});
  return out;
}

} // namespace

ordered_json polynomial_json(const Polynomial& p) {
  ordered_json out = ordered_json::array();
  if (p.is_univariate_in(Var::x)) {
    for (const Rational& c : p.coefficients(Var::x))
      out.push_back(c.get_str());
    return out;
  }
  for (const auto& [e, c] : p.terms())
    out.push_back({{"x", e[0]}, {"q", e[1]}, {"y", e[2]}, {"value", c.get_str()}});
  return out;
}

std::string render_triangle(const Triangle& t, Format f) {
  const std::string name(family_name(t.family));
  switch (f) {
  case Format::Text:
    return rows_text(name, t.first_row, t.rows);
  case Format::Csv:
    return rows_csv("family", name, t.first_row, t.rows, is_multivariate(t.family));
  case Format::Json: {
    ordered_json j;
    j["command"] = "triangle";
    j["params"] = {{"family", name}, {"n", t.last_row()}};
    j["results"] = {{{"family", name}, {"rows", rows_json(t.first_row, t.rows)}}};
    return dump(j);
  }
  }
  return {};
}

std::string render_series(std::string_view name, const FormalSeries& s, Format f) {
  std::vector<Polynomial> rows;
  for (int n = 0; n <= s.order(); ++n)
    rows.push_back(s.egf_coeff(n));
  switch (f) {
  case Format::Text: {
    std::ostringstream os;
    for (std::size_t n = 0; n < rows.size(); ++n)
      os << n << "  " << rows[n].to_string() << "\n";
    return os.str();
  }
  case Format::Csv: {
    bool multi = std::any_of(rows.begin(), rows.end(), [](const Polynomial& p) { return !p.is_univariate_in(Var::x); });
    return rows_csv("series", name, 0, rows, multi);
  }
  case Format::Json: {
    ordered_json j;
    j["command"] = "series";
    j["params"] = {{"name", name}, {"order", s.order()}};
    j["results"] = {{{"name", name}, {"rows", rows_json(0, rows)}}};
    return dump(j);
  }
  }
  return {};
}

std::string render_reports(std::string_view command, const ordered_json& params,
                           const std::vector<IdentityReport>& reports, Format f) {
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed(); });
  switch (f) {
  case Format::Text: {
    std::size_t width = 0;
    for (const auto& r : reports)
      width = std::max(width, r.id.size());
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.passed() ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ') << "n=" << r.n_min
         << ".." << r.n_max;
      if (r.counterexample)
        os << "  " << *r.counterexample;
      os << "\n";
    }
    os << reports.size() << " checked, " << failed << " failed\n";
    return os.str();
  }
  case Format::Csv: {
    std::ostringstream os;
    os << "id,n_min,n_max,verdict,counterexample\n";
    for (const auto& r : reports)
      os << r.id << "," << r.n_min << "," << r.n_max << "," << (r.passed() ? "pass" : "fail") << ","
         << csv_field(r.counterexample.value_or("")) << "\n";
    return os.str();
  }
  case Format::Json: {
    ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json e;
      e["id"] = r.id;
      e["range"] = {r.n_min, r.n_max};
      e["verdict"] = r.passed() ? "pass" : "fail";
      ordered_json per = ordered_json::array();
      for (const auto& [n, ok] : r.verdicts)
        per.push_back({{"n", n}, {"ok", ok}});
      e["per_n"] = per;
      e["counterexample"] = r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr);
      j["results"].push_back(e);
    }
    return dump(j);
  }
  }
  return {};
}

std::string render_listing(std::string_view command, const ordered_json& params, const Listing& listing, Format f) {
  switch (f) {
  case Format::Text: {
    std::vector<std::size_t> width(listing.columns.size());
    for (std::size_t c = 0; c < width.size(); ++c) {
      width[c] = listing.columns[c].size();
      for (const auto& row : listing.rows)
        width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += cells[c];
        if (c + 1 < cells.size())
          s += std::string(width[c] - cells[c].size() + 2, ' ');
      }
      os << s << "\n";
    };
    line(listing.columns);
    for (const auto& row : listing.rows)
      line(row);
    if (listing.show_count)
      os << "count: " << listing.rows.size() << "\n";
    return os.str();
  }
  case Format::Csv: {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        os << (c ? "," : "") << csv_field(cells[c]);
      os << "\n";
    };
    line(listing.columns);
    for (const auto& row : listing.rows)
      line(row);
    if (listing.show_count)
      os << "# count: " << listing.rows.size() << "\n";
    return os.str();
  }
  case Format::Json: {
    ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["results"] = ordered_json::array();
    for (const auto& row : listing.rows) {
      ordered_json e;
      for (std::size_t c = 0; c < row.size(); ++c)
        e[listing.columns[c]] = row[c];
      j["results"].push_back(e);
    }
    if (listing.show_count)
      j["count"] = listing.rows.size();
    return dump(j);
  }
  }
  return {};
}

int enumerate_bound(std::string_view cls) {
  if (cls == "simsun1" || cls == "simsun2" || cls == "cud")
    return 10;
  if (cls == "snakes")
    return 7;
  if (cls == "alternating")
    return 12;
  throw std::invalid_argument("unknown class '" + std::string(cls) + "'");
}

Listing enumerate_listing(std::string_view cls, int n) {
  const int bound = enumerate_bound(cls);
  if (n < 1 || n > bound)
    throw std::invalid_argument("enumerate " + std::string(cls) + ": n must lie in [1, " + std::to_string(bound) + "]");
  Listing out;
  auto s = [](int v) { return std::to_string(v); };
  if (cls == "simsun1") {
    out.columns = {"word", "des", "lpk", "pk", "uprun"};
    for (const Permutation& p : gen_simsun_first(n)) {
      const StatRecord st = word_stats(p);
      out.rows.push_back({p.to_string(), s(st.des), s(st.lpk), s(st.pk), s(st.uprun)});
    }
  } else if (cls == "simsun2") {
    out.columns = {"word", "cycles", "exc", "cyc", "fix"};
    for (const CycleDecomposition& c : gen_simsun_second(n)) {
      const Permutation p = from_cycles(c);
      const CycleStatRecord st = cycle_stats(p);
      out.rows.push_back({p.to_string(), c.to_string(), s(st.exc), s(st.cyc), s(st.fix)});
    }
  } else if (cls == "snakes") {
    out.columns = {"window"};
    for_each_signed(n, [&](std::span<const int> w) {
      if (is_snake(w))
        out.rows.push_back({SignedPermutation(std::vector<int>(w.begin(), w.end())).to_string()});
    });
  } else if (cls == "alternating") {
    out.columns = {"word", "des", "pk"};
    for_each_alternating(n, [&](std::span<const int> w) {
      out.rows.push_back({Permutation::trusted({w.begin(), w.end()}).to_string(), s(descents(w)), s(interior_peaks(w))});
    });
  } else {
    out.columns = {"word", "cycles", "cyc"};
    for_each_permutation(n, [&](std::span<const int> w) {
      if (!is_cycle_up_down(w))
        return;
      const Permutation p = Permutation::trusted({w.begin(), w.end()});
      out.rows.push_back({p.to_string(), to_cycles(p).to_string(), s(cycle_count(w))});
    });
  }
  return out;
}

} // namespace simsun
