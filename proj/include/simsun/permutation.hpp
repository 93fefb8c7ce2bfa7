#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simsun {

/// Thrown when an object fails its construction-time invariants.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of [n] in one-line notation.
class Permutation {
public:
  Permutation() = default;

  /// Validates that `word` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);

  /// Skips validation; the caller guarantees `word` is a permutation of [n].
  static Permutation trusted(std::vector<int> word);

  /// Accepts a digit string ("35142") or a comma-separated list ("10,2,1,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// One-based access, π(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const { return word_; }

  Permutation inverse() const;

  /// Digits when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> word_;
};

/// A signed permutation of ±[n], stored by its window π(1)..π(n).
class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  int size() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }

  /// Extends by π(-i) = -π(i); `i` may be negative but not zero.
  int operator()(int i) const;

  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;

private:
  std::vector<int> window_;
};

/// Standard cycle form: each cycle starts with its smallest entry, cycles sorted by
/// their smallest entries.
class CycleDecomposition {
public:
  CycleDecomposition() = default;

  /// Validates that the cycles partition [n] and rewrites them in standard form.
  explicit CycleDecomposition(std::vector<std::vector<int>> cycles);

  /// Parses "(1,4,3)(2)".
  static CycleDecomposition parse(std::string_view text);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& cycles() const { return cycles_; }

  std::string to_string() const;

  auto operator<=>(const CycleDecomposition&) const = default;

private:
  std::vector<std::vector<int>> cycles_;
  int n_ = 0;
};

struct StatRecord {
  int des = 0;
  int lpk = 0;
  int pk = 0;
  int altruns = 0;
  int uprun = 0;
  int lalt = 0;

  bool operator==(const StatRecord&) const = default;
};

struct CycleStatRecord {
  int exc = 0;
  int fix = 0;
  int cyc = 0;
  int cpk = 0;
  bool has_double_exc = false;

  bool operator==(const CycleStatRecord&) const = default;
};

// Word statistics. The span overloads take the one-line word π(1)..π(n).
int descents(std::span<const int> w);
int left_peaks(std::span<const int> w);
int interior_peaks(std::span<const int> w);
int alternating_runs(std::span<const int> w);
int up_down_runs(std::span<const int> w);
int longest_alternating_subsequence(std::span<const int> w);

StatRecord word_stats(const Permutation& p);

// Cycle-side statistics, also on the one-line word.
int excedances(std::span<const int> w);
int fixed_points(std::span<const int> w);
int cycle_count(std::span<const int> w);
int cyclic_peaks(std::span<const int> w);
bool has_double_excedance(std::span<const int> w);

CycleStatRecord cycle_stats(const Permutation& p);

CycleDecomposition to_cycles(const Permutation& p);
Permutation from_cycles(const CycleDecomposition& c);

/// Subword of letters <= k, in order of appearance.
Permutation restrict_to(const Permutation& p, int k);

/// Deletes the k largest letters from the functional graph, joining each deleted
/// letter's predecessor to its successor.
CycleDecomposition remove_largest(const CycleDecomposition& c, int k);

Permutation reverse(const Permutation& p);

bool is_snake(std::span<const int> window);
bool is_snake(const SignedPermutation& s);
bool is_alternating(std::span<const int> w);
bool is_alternating(const Permutation& p);
bool is_cycle_up_down(std::span<const int> w);
bool is_cycle_up_down(const Permutation& p);

/// Visits every permutation of [n] in lexicographic order. The span is only valid
/// during the call.
void for_each_permutation(int n, const std::function<void(std::span<const int>)>& visit);

/// Visits every signed window of length n in lexicographic order.
void for_each_signed(int n, const std::function<void(std::span<const int>)>& visit);

/// Visits the alternating permutations π(1) > π(2) < π(3) > ... of [n] in
/// lexicographic order, pruning on the shape.
void for_each_alternating(int n, const std::function<void(std::span<const int>)>& visit);

std::vector<Permutation> enumerate_permutations(int n);
std::vector<SignedPermutation> enumerate_signed(int n);

} // namespace simsun
