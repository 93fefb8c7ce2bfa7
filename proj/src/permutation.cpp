#include "simsun/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace simsun {

namespace {

bool is_rearrangement(std::span<const int> w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ValidationError("not an integer: '" + std::string(s) + "'");
  return value;
}

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty())
    return out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ValidationError("bad permutation word: '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos)
      end = text.size();
    out.push_back(parse_int(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

std::string join_word(std::span<const int> w) {
  std::string s;
  const bool compact = w.size() <= 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0)
      s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

} // namespace

// --- Permutation -----------------------------------------------------------

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  if (!is_rearrangement(word_))
    throw ValidationError("not a permutation of [" + std::to_string(word_.size()) + "]");
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return trusted(std::move(w));
}

Permutation Permutation::trusted(std::vector<int> word) {
  Permutation p;
  p.word_ = std::move(word);
  return p;
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_list(text)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i)
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return trusted(std::move(inv));
}

std::string Permutation::to_string() const { return join_word(word_); }

// --- SignedPermutation -----------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<int> abs_values(window_.size());
  std::transform(window_.begin(), window_.end(), abs_values.begin(),
                 [](int v) { return v < 0 ? -v : v; });
  if (!is_rearrangement(abs_values))
    throw ValidationError("absolute values of a signed window must form [n]");
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || i > size() || i < -size())
    throw std::out_of_range("signed permutation index out of range");
  return i > 0 ? window_[static_cast<std::size_t>(i - 1)] : -window_[static_cast<std::size_t>(-i - 1)];
}

std::string SignedPermutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i > 0)
      s += ',';
    s += std::to_string(window_[i]);
  }
  return s;
}

// --- CycleDecomposition ----------------------------------------------------

CycleDecomposition::CycleDecomposition(std::vector<std::vector<int>> cycles)
    : cycles_(std::move(cycles)) {
  std::vector<int> all;
  for (const auto& c : cycles_) {
    if (c.empty())
      throw ValidationError("empty cycle");
    all.insert(all.end(), c.begin(), c.end());
  }
  if (!is_rearrangement(all))
    throw ValidationError("cycles must contain each letter of [n] exactly once");
  n_ = static_cast<int>(all.size());
  for (auto& c : cycles_)
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cycles_.begin(), cycles_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

CycleDecomposition CycleDecomposition::parse(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  text = trim(text);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw ValidationError("expected '(' in cycle notation: '" + std::string(text) + "'");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ValidationError("unterminated cycle: '" + std::string(text) + "'");
    cycles.push_back(parse_list(text.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return CycleDecomposition(std::move(cycles));
}

std::string CycleDecomposition::to_string() const {
  std::string s;
  for (const auto& c : cycles_) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0)
        s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

// --- word statistics -------------------------------------------------------

int descents(std::span<const int> w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    d += w[i] > w[i + 1];
  return d;
}

int left_peaks(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const int before = i == 0 ? 0 : w[i - 1];
    count += before < w[i] && w[i] > w[i + 1];
  }
  return count;
}

int interior_peaks(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    count += w[i - 1] < w[i] && w[i] > w[i + 1];
  return count;
}

int alternating_runs(std::span<const int> w) {
  if (w.size() < 2)
    return 0;
  int runs = 1;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    runs += (w[i - 1] < w[i]) != (w[i] < w[i + 1]);
  return runs;
}

int up_down_runs(std::span<const int> w) {
  if (w.empty())
    return 0;
  // alternating runs of 0 w(1) ... w(n)
  int runs = 1;
  int prev = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    runs += (prev < w[i]) != (w[i] < w[i + 1]);
    prev = w[i];
  }
  return runs;
}

int longest_alternating_subsequence(std::span<const int> w) {
  // odd_len[i]: longest a1 > a2 < a3 > ... ending at i with odd length,
  // even_len[i]: same with even length (0 when impossible).
  const std::size_t n = w.size();
  std::vector<int> odd_len(n, 1), even_len(n, 0);
  int best = n == 0 ? 0 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] > w[i])
        even_len[i] = std::max(even_len[i], odd_len[j] + 1);
      else if (even_len[j] > 0)
        odd_len[i] = std::max(odd_len[i], even_len[j] + 1);
    }
    best = std::max({best, odd_len[i], even_len[i]});
  }
  return best;
}

StatRecord word_stats(const Permutation& p) {
  const auto w = p.word();
  return {descents(w),         left_peaks(w),   interior_peaks(w),
          alternating_runs(w), up_down_runs(w), longest_alternating_subsequence(w)};
}

// --- cycle statistics ------------------------------------------------------

int excedances(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    count += w[i] > static_cast<int>(i) + 1;
  return count;
}

int fixed_points(std::span<const int> w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    count += w[i] == static_cast<int>(i) + 1;
  return count;
}

int cycle_count(std::span<const int> w) {
  std::vector<bool> seen(w.size() + 1, false);
  int cycles = 0;
  for (int start = 1; start <= static_cast<int>(w.size()); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    ++cycles;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = w[static_cast<std::size_t>(v - 1)])
      seen[static_cast<std::size_t>(v)] = true;
  }
  return cycles;
}

namespace {

// Calls f(pred, value, succ) for every value of the word viewed as a map.
template <class F>
void for_each_value_with_neighbours(std::span<const int> w, F&& f) {
  std::vector<int> inv(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    inv[static_cast<std::size_t>(w[i])] = static_cast<int>(i) + 1;
  for (int x = 1; x <= static_cast<int>(w.size()); ++x)
    f(inv[static_cast<std::size_t>(x)], x, w[static_cast<std::size_t>(x - 1)]);
}

} // namespace

int cyclic_peaks(std::span<const int> w) {
  int count = 0;
  for_each_value_with_neighbours(w, [&](int pred, int x, int succ) { count += pred < x && x > succ; });
  return count;
}

bool has_double_excedance(std::span<const int> w) {
  bool found = false;
  for_each_value_with_neighbours(w, [&](int pred, int x, int succ) { found |= pred < x && x < succ; });
  return found;
}

CycleStatRecord cycle_stats(const Permutation& p) {
  const auto w = p.word();
  return {excedances(w), fixed_points(w), cycle_count(w), cyclic_peaks(w), has_double_excedance(w)};
}

// --- conversions -----------------------------------------------------------

CycleDecomposition to_cycles(const Permutation& p) {
  const auto w = p.word();
  std::vector<bool> seen(w.size() + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    auto& c = cycles.emplace_back();
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = w[static_cast<std::size_t>(v - 1)]) {
      seen[static_cast<std::size_t>(v)] = true;
      c.push_back(v);
    }
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation from_cycles(const CycleDecomposition& c) {
  std::vector<int> w(static_cast<std::size_t>(c.size()));
  for (const auto& cycle : c.cycles())
    for (std::size_t i = 0; i < cycle.size(); ++i)
      w[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
  return Permutation::trusted(std::move(w));
}

Permutation restrict_to(const Permutation& p, int k) {
  if (k < 0 || k > p.size())
    throw std::out_of_range("restrict_to: k must lie in [0, n]");
  std::vector<int> sub;
  sub.reserve(static_cast<std::size_t>(k));
  for (int v : p.word())
    if (v <= k)
      sub.push_back(v);
  return Permutation::trusted(std::move(sub));
}

CycleDecomposition remove_largest(const CycleDecomposition& c, int k) {
  const int n = c.size();
  if (k < 0 || k > n)
    throw std::out_of_range("remove_largest: k must lie in [0, n]");
  std::vector<std::vector<int>> cycles;
  for (const auto& cycle : c.cycles()) {
    std::vector<int> kept;
    std::copy_if(cycle.begin(), cycle.end(), std::back_inserter(kept),
                 [&](int v) { return v <= n - k; });
    if (!kept.empty())
      cycles.push_back(std::move(kept));
  }
  return CycleDecomposition(std::move(cycles));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation::trusted(std::move(w));
}

bool is_snake(std::span<const int> w) {
  if (w.empty())
    return true;
  if (w[0] <= 0)
    return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool want_down = i % 2 == 0;
    if (want_down ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1]))
      return false;
  }
  return true;
}

bool is_snake(const SignedPermutation& s) { return is_snake(s.window()); }

bool is_alternating(std::span<const int> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool want_down = i % 2 == 0;
    if (want_down ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1]))
      return false;
  }
  return true;
}

bool is_alternating(const Permutation& p) { return is_alternating(p.word()); }

bool is_cycle_up_down(std::span<const int> w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int start = 1; start <= static_cast<int>(w.size()); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    // `start` is the minimum of its cycle since smaller letters were visited first.
    bool rising = true;
    int prev = start;
    seen[static_cast<std::size_t>(start)] = true;
    for (int v = w[static_cast<std::size_t>(start - 1)]; v != start; v = w[static_cast<std::size_t>(v - 1)]) {
      if (rising ? !(prev < v) : !(prev > v))
        return false;
      seen[static_cast<std::size_t>(v)] = true;
      rising = !rising;
      prev = v;
    }
  }
  return true;
}

bool is_cycle_up_down(const Permutation& p) { return is_cycle_up_down(p.word()); }

// --- enumeration -----------------------------------------------------------

void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

namespace {

// Depth-first fill in increasing value order, which yields lexicographic output.
template <class Accept>
void fill_words(std::vector<int>& w, std::vector<bool>& used, std::size_t pos,
                std::span<const int> candidates, Accept&& accept,
                const std::function<void(std::span<const int>)>& visit) {
  if (pos == w.size()) {
    visit(w);
    return;
  }
  for (int v : candidates) {
    const auto a = static_cast<std::size_t>(v < 0 ? -v : v);
    if (used[a] || !accept(pos, v))
      continue;
    used[a] = true;
    w[pos] = v;
    fill_words(w, used, pos + 1, candidates, accept, visit);
    used[a] = false;
  }
}

} // namespace

void for_each_signed(int n, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> candidates;
  for (int v = -n; v <= n; ++v)
    if (v != 0)
      candidates.push_back(v);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  fill_words(w, used, 0, candidates, [](std::size_t, int) { return true; }, visit);
}

void for_each_alternating(int n, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> candidates(static_cast<std::size_t>(n));
  std::iota(candidates.begin(), candidates.end(), 1);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto accept = [&w](std::size_t pos, int v) {
    if (pos == 0)
      return true;
    return pos % 2 == 1 ? w[pos - 1] > v : w[pos - 1] < v;
  };
  fill_words(w, used, 0, candidates, accept, visit);
}

std::vector<Permutation> enumerate_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](std::span<const int> w) {
    out.push_back(Permutation::trusted(std::vector<int>(w.begin(), w.end())));
  });
  return out;
}

std::vector<SignedPermutation> enumerate_signed(int n) {
  std::vector<SignedPermutation> out;
  for_each_signed(n, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

} // namespace simsun
