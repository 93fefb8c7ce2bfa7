#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

// Brute-force helpers that share no code with the library.
namespace oracle {

inline void all_perms(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do
    visit(w);
  while (std::next_permutation(w.begin(), w.end()));
}

inline int des(const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    d += w[i] > w[i + 1];
  return d;
}

inline int pk(const std::vector<int>& w) {
  int k = 0;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    k += w[i - 1] < w[i] && w[i] > w[i + 1];
  return k;
}

// Direction changes plus one; zero for n = 1.
inline int altruns(const std::vector<int>& w) {
  if (w.size() < 2)
    return 0;
  int runs = 1;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    runs += (w[i] > w[i - 1]) != (w[i + 1] > w[i]);
  return runs;
}

// No restriction to [k] has a double descent.
inline bool simsun(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<int> r;
    for (int v : w)
      if (v <= k)
        r.push_back(v);
    for (std::size_t i = 0; i + 2 < r.size(); ++i)
      if (r[i] > r[i + 1] && r[i + 1] > r[i + 2])
        return false;
  }
  return true;
}

inline std::map<int, long> histogram(int n, const std::function<bool(const std::vector<int>&)>& keep,
                                     const std::function<int(const std::vector<int>&)>& stat) {
  std::map<int, long> h;
  all_perms(n, [&](const std::vector<int>& w) {
    if (keep(w))
      ++h[stat(w)];
  });
  return h;
}

// Set partitions of [n] into exactly i blocks, via restricted growth strings.
inline long set_partitions(int n, int i) {
  long count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int pos, int blocks) {
    if (pos == n) {
      count += blocks == i;
      return;
    }
    for (int b = 0; b <= blocks && b < i; ++b) {
      a[static_cast<std::size_t>(pos)] = b;
      go(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0)
    return i == 0;
  go(0, 0);
  return count;
}

} // namespace oracle
