#pragma once

#include <vector>

#include "simsun/permutation.hpp"
#include "simsun/report.hpp"

namespace simsun {

/// Where the largest letter was inserted, relative to the labels of the
/// permutation it was inserted into.
enum class SlotKind { End, X, Y };

struct Slot {
  SlotKind kind = SlotKind::End;
  int index = 0; // r for X, s for Y; unused for End

  bool operator==(const Slot&) const = default;
};

/// Slot classifications for the insertions 1 -> 2 -> ... -> n.
using InsertionHistory = std::vector<Slot>;

/// Classifies the gap g of a simsun word under its first-kind labeling.
Slot classify_first_slot(std::span<const int> w, int gap);

/// The gap of w that carries the given first-kind label (End is the gap after π(n)).
int gap_of_first_slot(std::span<const int> w, Slot slot);

/// Requires a simsun permutation of the first kind.
InsertionHistory insertion_history(const Permutation& p);
Permutation replay_history(const InsertionHistory& history);

struct PhiImage {
  Permutation source;
  /// Members of S_{n+1} with pk equal to des(source), in construction order.
  std::vector<Permutation> image;
};

/// Throws ValidationError unless p is simsun of the first kind with n >= 1.
PhiImage phi_forward(const Permutation& p);

/// The simsun permutation whose block contains t; t must have length >= 2.
Permutation phi_inverse(const Permutation& t);

/// Throws ValidationError unless p is simsun of the first kind.
CycleDecomposition psi_forward(const Permutation& p);

/// Throws ValidationError unless c is simsun of the second kind.
Permutation psi_inverse(const CycleDecomposition& c);

/// Exhaustive checks for every n in [1, n_max].
IdentityReport verify_phi(int n_max);
IdentityReport verify_psi(int n_max);

} // namespace simsun
