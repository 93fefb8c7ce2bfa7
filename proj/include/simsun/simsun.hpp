#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simsun/permutation.hpp"
#include "simsun/polynomial.hpp"

namespace simsun {

/// No restriction to [k] contains π(i) > π(i+1) > π(i+2).
bool is_simsun_first(std::span<const int> w);
bool is_simsun_first(const Permutation& p);

/// No double excedance survives deletion of the k largest letters, for every
/// k in {0, ..., n}.
bool is_simsun_second(std::span<const int> w);
bool is_simsun_second(const Permutation& p);

/// Descent positions D(π) = {i in [n-1] : π(i) > π(i+1)}, increasing.
std::vector<int> descent_set(std::span<const int> w);

/// Gaps (g means "right after π(g)", g = 0 is the front) where n+1 may be inserted
/// while keeping a simsun permutation of the first kind.
std::vector<int> admissible_gaps(std::span<const int> w);

/// Letters after which n+1 may be spliced in cycle form while staying simsun of
/// the second kind: every letter that is not a cyclic-peak value.
std::vector<int> admissible_letters(std::span<const int> w);

/// Visitors run depth-first over the insertion tree; every member is reached
/// exactly once, not in lexicographic order.
void for_each_simsun_first(int n, const std::function<void(std::span<const int>)>& visit);
void for_each_simsun_second(int n, const std::function<void(std::span<const int>)>& visit);

/// RS_n in lexicographic order.
std::vector<Permutation> gen_simsun_first(int n);

/// SS_n, ordered lexicographically by one-line word.
std::vector<CycleDecomposition> gen_simsun_second(int n);

enum class LabelKind : char { x = 'x', y = 'y', p = 'p', q = 'q', u = 'u', v = 'v' };

/// A label placed at gap `gap` (right after π(gap); gap 0 is the front).
struct SlotLabel {
  int gap = 0;
  LabelKind kind = LabelKind::x;
  int index = 0;

  bool operator==(const SlotLabel&) const = default;
};

struct LabeledWord {
  Permutation base;
  /// Sorted by gap.
  std::vector<SlotLabel> labels;

  /// "^{y1}34^{x1}1^{y2}2^{y3}5"
  std::string to_string() const;
};

/// A label written right after the letter `after` in cycle form.
struct CycleLabel {
  int after = 0;
  LabelKind kind = LabelKind::u;
  int index = 0;

  bool operator==(const CycleLabel&) const = default;
};

struct LabeledCycles {
  CycleDecomposition base;
  std::vector<CycleLabel> labels;

  /// "(1^{u1}43^{v1})(2^{v2})"
  std::string to_string() const;
};

/// x-labels at descents, y-labels at the remaining gaps in {0..n-1} that are
/// neither descents nor immediately before one. Throws ValidationError unless
/// the input is simsun of the first kind.
LabeledWord label_first(const Permutation& p);

/// p_r on both sides of the r-th interior peak; q-labels on the remaining inner
/// gaps. Defined on every permutation.
LabeledWord label_peak(const Permutation& p);

/// u_r after the r-th excedance position; v-labels after every other letter that
/// is not a cyclic-peak value, left to right in the standard form. Throws
/// ValidationError unless the input is simsun of the second kind.
LabeledCycles label_second(const CycleDecomposition& c);

enum class PermClass { RS, RSplus, RSminus, SS, All, Snake, CUD, Alt };
enum class Stat { des, lpk, pk, uprun, exc, cyc, fix };

std::string_view class_name(PermClass c);
std::optional<PermClass> parse_class(std::string_view name);
std::string_view stat_name(Stat s);
std::optional<Stat> parse_stat(std::string_view name);

/// Σ over the class of x^{word stat} q^{cyc} y^{fix}, where at most one of des, lpk,
/// pk, uprun, exc may be requested (it is carried by x). Snakes support only the
/// plain count (empty stat list). Throws std::invalid_argument otherwise.
Polynomial distribution(PermClass cls, std::span<const Stat> stats, int n);

/// Number of members of the class.
Integer class_size(PermClass cls, int n);

} // namespace simsun
