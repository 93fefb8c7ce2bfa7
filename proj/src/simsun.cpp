#include "simsun/simsun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace simsun {

namespace {

bool has_double_descent(std::span<const int> w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] > w[i + 1] && w[i + 1] > w[i + 2])
      return true;
  return false;
}

std::vector<int> inverse_of(std::span<const int> w) {
  std::vector<int> inv(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    inv[static_cast<std::size_t>(w[i])] = static_cast<int>(i) + 1;
  return inv;
}

int value_at(std::span<const int> w, int i) { return w[static_cast<std::size_t>(i - 1)]; }

void grow_first(std::vector<int>& w, int n, const std::function<void(std::span<const int>)>& visit) {
  const int m = static_cast<int>(w.size());
  if (m == n) {
    visit(w);
    return;
  }
  for (int g = 0; g <= m; ++g) {
    // g is forbidden when π(g+1) > π(g+2), i.e. g+1 is a descent
    if (g + 1 < m && w[static_cast<std::size_t>(g)] > w[static_cast<std::size_t>(g + 1)])
      continue;
    w.insert(w.begin() + g, m + 1);
    grow_first(w, n, visit);
    w.erase(w.begin() + g);
  }
}

void grow_second(std::vector<int>& w, int n, const std::function<void(std::span<const int>)>& visit) {
  const int m = static_cast<int>(w.size());
  if (m == n) {
    visit(w);
    return;
  }
  const std::vector<int> letters = admissible_letters(w);
  w.push_back(m + 1);
  for (int x : letters) {
    const auto xi = static_cast<std::size_t>(x - 1);
    w.back() = w[xi];
    w[xi] = m + 1;
    grow_second(w, n, visit);
    w[xi] = w.back();
  }
  w.back() = m + 1;
  grow_second(w, n, visit);
  w.pop_back();
}

std::string render_letter_list(const std::vector<std::pair<int, std::string>>& items, bool separate) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (separate && i > 0)
      s += ',';
    s += std::to_string(items[i].first) + items[i].second;
  }
  return s;
}

std::string label_text(LabelKind kind, int index) {
  return "^{" + std::string(1, static_cast<char>(kind)) + std::to_string(index) + "}";
}

} // namespace

bool is_simsun_first(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> sub;
  sub.reserve(w.size());
  for (int k = 3; k <= n; ++k) {
    sub.clear();
    for (int v : w)
      if (v <= k)
        sub.push_back(v);
    if (has_double_descent(sub))
      return false;
  }
  return true;
}

bool is_simsun_first(const Permutation& p) { return is_simsun_first(p.word()); }

bool is_simsun_second(std::span<const int> word) {
  std::vector<int> w(word.begin(), word.end());
  std::vector<int> inv = inverse_of(w);
  for (int m = static_cast<int>(w.size()); m >= 1; --m) {
    std::span<const int> current(w.data(), static_cast<std::size_t>(m));
    if (has_double_excedance(current))
      return false;
    // bypass the letter m: its predecessor now maps to its successor
    const int pred = inv[static_cast<std::size_t>(m)];
    const int succ = w[static_cast<std::size_t>(m - 1)];
    if (pred != m) {
      w[static_cast<std::size_t>(pred - 1)] = succ;
      inv[static_cast<std::size_t>(succ)] = pred;
    }
  }
  return true;
}

bool is_simsun_second(const Permutation& p) { return is_simsun_second(p.word()); }

std::vector<int> descent_set(std::span<const int> w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1])
      d.push_back(static_cast<int>(i) + 1);
  return d;
}

std::vector<int> admissible_gaps(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> gaps;
  for (int g = 0; g <= n; ++g)
    if (!(g + 1 < n && w[static_cast<std::size_t>(g)] > w[static_cast<std::size_t>(g + 1)]))
      gaps.push_back(g);
  return gaps;
}

std::vector<int> admissible_letters(std::span<const int> w) {
  const auto inv = inverse_of(w);
  std::vector<int> letters;
  for (int x = 1; x <= static_cast<int>(w.size()); ++x) {
    const bool cyclic_peak = inv[static_cast<std::size_t>(x)] < x && x > value_at(w, x);
    if (!cyclic_peak)
      letters.push_back(x);
  }
  return letters;
}

void for_each_simsun_first(int n, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(std::max(n, 0)));
  if (n <= 0) {
    visit(w);
    return;
  }
  w.push_back(1);
  grow_first(w, n, visit);
}

void for_each_simsun_second(int n, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(std::max(n, 0)) + 1);
  if (n <= 0) {
    visit(w);
    return;
  }
  w.push_back(1);
  grow_second(w, n, visit);
}

std::vector<Permutation> gen_simsun_first(int n) {
  std::vector<Permutation> out;
  for_each_simsun_first(n, [&](std::span<const int> w) {
    out.push_back(Permutation::trusted(std::vector<int>(w.begin(), w.end())));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CycleDecomposition> gen_simsun_second(int n) {
  std::vector<Permutation> words;
  for_each_simsun_second(n, [&](std::span<const int> w) {
    words.push_back(Permutation::trusted(std::vector<int>(w.begin(), w.end())));
  });
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<CycleDecomposition> out;
  out.reserve(words.size());
  for (const auto& p : words)
    out.push_back(to_cycles(p));
  return out;
}

// --- labels ----------------------------------------------------------------

std::string LabeledWord::to_string() const {
  std::string s;
  auto it = labels.begin();
  auto emit_gap = [&](int g) {
    for (; it != labels.end() && it->gap == g; ++it)
      s += label_text(it->kind, it->index);
  };
  emit_gap(0);
  const bool separate = base.size() > 9;
  for (int i = 1; i <= base.size(); ++i) {
    if (separate && i > 1)
      s += ',';
    s += std::to_string(base(i));
    emit_gap(i);
  }
  return s;
}

std::string LabeledCycles::to_string() const {
  std::string s;
  const bool separate = base.size() > 9;
  for (const auto& cycle : base.cycles()) {
    std::vector<std::pair<int, std::string>> items;
    for (int letter : cycle) {
      std::string tag;
      for (const auto& l : labels)
        if (l.after == letter)
          tag += label_text(l.kind, l.index);
      items.emplace_back(letter, tag);
    }
    s += '(' + render_letter_list(items, separate) + ')';
  }
  return s;
}

LabeledWord label_first(const Permutation& p) {
  if (!is_simsun_first(p))
    throw ValidationError("label_first: " + p.to_string() + " is not simsun");
  const int n = p.size();
  const auto d = descent_set(p.word());
  std::vector<bool> blocked(static_cast<std::size_t>(n) + 1, false);
  for (int i : d) {
    blocked[static_cast<std::size_t>(i)] = true;
    blocked[static_cast<std::size_t>(i - 1)] = true;
  }
  LabeledWord out{p, {}};
  int next_x = 1, next_y = 1;
  for (int g = 0; g < n; ++g) {
    if (std::binary_search(d.begin(), d.end(), g))
      out.labels.push_back({g, LabelKind::x, next_x++});
    else if (!blocked[static_cast<std::size_t>(g)])
      out.labels.push_back({g, LabelKind::y, next_y++});
  }
  return out;
}

LabeledWord label_peak(const Permutation& p) {
  const int n = p.size();
  std::vector<int> peaks;
  for (int i = 2; i < n; ++i)
    if (p(i - 1) < p(i) && p(i) > p(i + 1))
      peaks.push_back(i);
  std::vector<int> peak_at(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < peaks.size(); ++r) {
    peak_at[static_cast<std::size_t>(peaks[r] - 1)] = static_cast<int>(r) + 1;
    peak_at[static_cast<std::size_t>(peaks[r])] = static_cast<int>(r) + 1;
  }
  LabeledWord out{p, {}};
  int next_q = 1;
  for (int g = 1; g < n; ++g) {
    if (int r = peak_at[static_cast<std::size_t>(g)]; r > 0)
      out.labels.push_back({g, LabelKind::p, r});
    else
      out.labels.push_back({g, LabelKind::q, next_q++});
  }
  return out;
}

LabeledCycles label_second(const CycleDecomposition& c) {
  const Permutation p = from_cycles(c);
  if (!is_simsun_second(p))
    throw ValidationError("label_second: " + c.to_string() + " is not simsun of the second kind");
  const auto w = p.word();
  const auto inv = inverse_of(w);
  const int n = p.size();

  std::vector<int> exc_rank(static_cast<std::size_t>(n) + 1, 0);
  int r = 0;
  for (int i = 1; i < n; ++i)
    if (value_at(w, i) > i)
      exc_rank[static_cast<std::size_t>(i)] = ++r;

  LabeledCycles out{c, {}};
  int next_v = 1;
  for (const auto& cycle : c.cycles()) {
    for (int letter : cycle) {
      const auto li = static_cast<std::size_t>(letter);
      const bool cyclic_peak = inv[li] < letter && letter > value_at(w, letter);
      if (exc_rank[li] > 0)
        out.labels.push_back({letter, LabelKind::u, exc_rank[li]});
      else if (!cyclic_peak)
        out.labels.push_back({letter, LabelKind::v, next_v++});
    }
  }
  return out;
}

// --- distributions ---------------------------------------------------------

std::string_view class_name(PermClass c) {
  switch (c) {
  case PermClass::RS:
    return "RS";
  case PermClass::RSplus:
    return "RS+";
  case PermClass::RSminus:
    return "RS-";
  case PermClass::SS:
    return "SS";
  case PermClass::All:
    return "ALL";
  case PermClass::Snake:
    return "SNAKE";
  case PermClass::CUD:
    return "CUD";
  case PermClass::Alt:
    return "ALT";
  }
  return "?";
}

std::optional<PermClass> parse_class(std::string_view name) {
  for (auto c : {PermClass::RS, PermClass::RSplus, PermClass::RSminus, PermClass::SS, PermClass::All,
                 PermClass::Snake, PermClass::CUD, PermClass::Alt})
    if (class_name(c) == name)
      return c;
  return std::nullopt;
}

std::string_view stat_name(Stat s) {
  switch (s) {
  case Stat::des:
    return "des";
  case Stat::lpk:
    return "lpk";
  case Stat::pk:
    return "pk";
  case Stat::uprun:
    return "uprun";
  case Stat::exc:
    return "exc";
  case Stat::cyc:
    return "cyc";
  case Stat::fix:
    return "fix";
  }
  return "?";
}

std::optional<Stat> parse_stat(std::string_view name) {
  for (auto s : {Stat::des, Stat::lpk, Stat::pk, Stat::uprun, Stat::exc, Stat::cyc, Stat::fix})
    if (stat_name(s) == name)
      return s;
  return std::nullopt;
}

Polynomial distribution(PermClass cls, std::span<const Stat> stats, int n) {
  if (n < 0)
    throw std::invalid_argument("distribution: n must be nonnegative");
  std::optional<Stat> x_stat;
  bool want_cyc = false, want_fix = false;
  for (Stat s : stats) {
    if (s == Stat::cyc) {
      if (want_cyc)
        throw std::invalid_argument("distribution: duplicate stat cyc");
      want_cyc = true;
    } else if (s == Stat::fix) {
      if (want_fix)
        throw std::invalid_argument("distribution: duplicate stat fix");
      want_fix = true;
    } else {
      if (x_stat)
        throw std::invalid_argument("distribution: at most one of des, lpk, pk, uprun, exc");
      x_stat = s;
    }
  }
  if (cls == PermClass::Snake && !stats.empty())
    throw std::invalid_argument("distribution: snakes support only the plain count");

  auto x_value = [&](std::span<const int> w) -> unsigned {
    if (!x_stat)
      return 0;
    switch (*x_stat) {
    case Stat::des:
      return static_cast<unsigned>(descents(w));
    case Stat::lpk:
      return static_cast<unsigned>(left_peaks(w));
    case Stat::pk:
      return static_cast<unsigned>(interior_peaks(w));
    case Stat::uprun:
      return static_cast<unsigned>(up_down_runs(w));
    case Stat::exc:
      return static_cast<unsigned>(excedances(w));
    default:
      return 0;
    }
  };

  std::map<Exponents, unsigned long long> counts;
  auto tally = [&](std::span<const int> w) {
    const Exponents e{x_value(w), want_cyc ? static_cast<unsigned>(cycle_count(w)) : 0U,
                      want_fix ? static_cast<unsigned>(fixed_points(w)) : 0U};
    ++counts[e];
  };

  switch (cls) {
  case PermClass::RS:
    for_each_simsun_first(n, tally);
    break;
  case PermClass::RSplus:
    for_each_simsun_first(n, [&](std::span<const int> w) {
      if (w.size() < 2 || w[0] > w[1])
        tally(w);
    });
    break;
  case PermClass::RSminus:
    for_each_simsun_first(n, [&](std::span<const int> w) {
      if (w.size() < 2 || w[0] < w[1])
        tally(w);
    });
    break;
  case PermClass::SS:
    for_each_simsun_second(n, tally);
    break;
  case PermClass::All:
    for_each_permutation(n, tally);
    break;
  case PermClass::Snake:
    for_each_signed(n, [&](std::span<const int> w) {
      if (is_snake(w))
        ++counts[{0, 0, 0}];
    });
    break;
  case PermClass::CUD:
    for_each_permutation(n, [&](std::span<const int> w) {
      if (is_cycle_up_down(w))
        tally(w);
    });
    break;
  case PermClass::Alt:
    for_each_alternating(n, tally);
    break;
  }

  Polynomial out;
  for (const auto& [e, count] : counts)
    out += Polynomial::monomial(Rational(Integer(std::to_string(count))), e);
  return out;
}

Integer class_size(PermClass cls, int n) {
  return distribution(cls, std::span<const Stat>{}, n).evaluate_at_one().get_num();
}

} // namespace simsun
