#include "simsun/bijection.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "simsun/numbers.hpp"
#include "simsun/simsun.hpp"

namespace simsun {

namespace {

std::vector<int> insert_at(std::span<const int> w, int gap, int letter) {
  std::vector<int> out(w.begin(), w.end());
  out.insert(out.begin() + gap, letter);
  return out;
}

std::vector<int> without_largest(std::span<const int> w) {
  std::vector<int> out;
  out.reserve(w.size());
  const int n = static_cast<int>(w.size());
  for (int v : w)
    if (v != n)
      out.push_back(v);
  return out;
}

int position_of_largest(std::span<const int> w) {
  const auto it = std::find(w.begin(), w.end(), static_cast<int>(w.size()));
  return static_cast<int>(it - w.begin());
}

Slot slot_from_label(LabelKind kind, int index) {
  if (kind == LabelKind::x || kind == LabelKind::p || kind == LabelKind::u)
    return {SlotKind::X, index};
  return {SlotKind::Y, index};
}

/// The gaps carrying peak label p_r (two of them) or q_s (one) in w.
std::vector<int> gaps_of_peak_slot(std::span<const int> w, Slot slot) {
  const auto labeled = label_peak(Permutation::trusted({w.begin(), w.end()}));
  const LabelKind want = slot.kind == SlotKind::X ? LabelKind::p : LabelKind::q;
  std::vector<int> gaps;
  for (const auto& l : labeled.labels)
    if (l.kind == want && l.index == slot.index)
      gaps.push_back(l.gap);
  return gaps;
}

std::vector<int> apply_slot(std::span<const int> member, Slot slot, int letter, int choice) {
  const int m = static_cast<int>(member.size());
  if (slot.kind == SlotKind::End)
    return insert_at(member, choice == 0 ? m : 0, letter);
  const auto gaps = gaps_of_peak_slot(member, slot);
  return insert_at(member, gaps.at(static_cast<std::size_t>(choice)), letter);
}

std::vector<std::vector<int>> phi_words(const Permutation& p) {
  const int n = p.size();
  if (n == 1)
    return {{1, 2}, {2, 1}};
  const auto minus = without_largest(p.word());
  const Slot slot = classify_first_slot(minus, position_of_largest(p.word()));
  const auto members = phi_words(Permutation::trusted(minus));
  std::vector<std::vector<int>> out;
  switch (slot.kind) {
  case SlotKind::End:
    for (const auto& s : members)
      for (int choice : {0, 1})
        out.push_back(apply_slot(s, slot, n + 1, choice));
    break;
  case SlotKind::X:
    for (int choice : {0, 1})
      for (const auto& s : members)
        out.push_back(apply_slot(s, slot, n + 1, choice));
    break;
  case SlotKind::Y:
    for (const auto& s : members)
      out.push_back(apply_slot(s, slot, n + 1, 0));
    break;
  }
  return out;
}

/// Splices `letter` into the cycle of `after`, right behind it.
void splice_after(std::vector<int>& w, int after, int letter) {
  w.push_back(0);
  w[static_cast<std::size_t>(letter - 1)] = w[static_cast<std::size_t>(after - 1)];
  w[static_cast<std::size_t>(after - 1)] = letter;
}

std::vector<int> psi_word(const Permutation& p) {
  const int n = p.size();
  if (n == 1)
    return {1};
  const auto minus = without_largest(p.word());
  const Slot slot = classify_first_slot(minus, position_of_largest(p.word()));
  std::vector<int> w = psi_word(Permutation::trusted(minus));
  if (slot.kind == SlotKind::End) {
    w.push_back(n);
    return w;
  }
  const auto labeled = label_second(to_cycles(Permutation::trusted(w)));
  const LabelKind want = slot.kind == SlotKind::X ? LabelKind::u : LabelKind::v;
  for (const auto& l : labeled.labels)
    if (l.kind == want && l.index == slot.index) {
      splice_after(w, l.after, n);
      return w;
    }
  throw ValidationError("psi_forward: missing cycle label for " + p.to_string());
}

std::string block_text(const std::vector<std::vector<int>>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += Permutation::trusted(words[i]).to_string();
  }
  return out + "}";
}

} // namespace

Slot classify_first_slot(std::span<const int> w, int gap) {
  const int n = static_cast<int>(w.size());
  if (gap < 0 || gap > n)
    throw std::out_of_range("classify_first_slot: gap " + std::to_string(gap));
  if (gap == n)
    return {SlotKind::End, 0};
  const auto labeled = label_first(Permutation::trusted({w.begin(), w.end()}));
  for (const auto& l : labeled.labels)
    if (l.gap == gap)
      return slot_from_label(l.kind, l.index);
  throw ValidationError("classify_first_slot: gap " + std::to_string(gap) + " of " +
                        labeled.base.to_string() + " is not admissible");
}

int gap_of_first_slot(std::span<const int> w, Slot slot) {
  const int n = static_cast<int>(w.size());
  if (slot.kind == SlotKind::End)
    return n;
  const auto labeled = label_first(Permutation::trusted({w.begin(), w.end()}));
  const LabelKind want = slot.kind == SlotKind::X ? LabelKind::x : LabelKind::y;
  for (const auto& l : labeled.labels)
    if (l.kind == want && l.index == slot.index)
      return l.gap;
  throw std::out_of_range("gap_of_first_slot: no such label in " + labeled.base.to_string());
}

InsertionHistory insertion_history(const Permutation& p) {
  if (!is_simsun_first(p))
    throw ValidationError("insertion_history: " + p.to_string() + " is not simsun");
  InsertionHistory history;
  for (int m = 2; m <= p.size(); ++m) {
    const Permutation upto = restrict_to(p, m);
    history.push_back(classify_first_slot(without_largest(upto.word()), position_of_largest(upto.word())));
  }
  return history;
}

Permutation replay_history(const InsertionHistory& history) {
  std::vector<int> w{1};
  for (const Slot& slot : history) {
    const int next = static_cast<int>(w.size()) + 1;
    w = insert_at(w, gap_of_first_slot(w, slot), next);
  }
  return Permutation::trusted(std::move(w));
}

PhiImage phi_forward(const Permutation& p) {
  if (p.size() < 1 || !is_simsun_first(p))
    throw ValidationError("phi_forward: " + p.to_string() + " is not a nonempty simsun permutation");
  PhiImage out{p, {}};
  for (auto& w : phi_words(p))
    out.image.push_back(Permutation::trusted(std::move(w)));
  return out;
}

Permutation phi_inverse(const Permutation& t) {
  const int size = t.size();
  if (size < 2)
    throw ValidationError("phi_inverse: needs length >= 2");
  if (size == 2)
    return Permutation::trusted({1});
  const auto minus = without_largest(t.word());
  const int gap = position_of_largest(t.word());
  Slot slot{SlotKind::End, 0};
  if (gap > 0 && gap < size - 1) {
    const auto labeled = label_peak(Permutation::trusted(minus));
    for (const auto& l : labeled.labels)
      if (l.gap == gap)
        slot = slot_from_label(l.kind, l.index);
  }
  const Permutation below = phi_inverse(Permutation::trusted(minus));
  return Permutation::trusted(insert_at(below.word(), gap_of_first_slot(below.word(), slot), size - 1));
}

CycleDecomposition psi_forward(const Permutation& p) {
  if (p.size() < 1 || !is_simsun_first(p))
    throw ValidationError("psi_forward: " + p.to_string() + " is not a nonempty simsun permutation");
  return to_cycles(Permutation::trusted(psi_word(p)));
}

Permutation psi_inverse(const CycleDecomposition& c) {
  const int n = c.size();
  const Permutation w = from_cycles(c);
  if (n < 1 || !is_simsun_second(w))
    throw ValidationError("psi_inverse: " + c.to_string() + " is not simsun of the second kind");
  if (n == 1)
    return Permutation::trusted({1});
  const int pred = w.inverse()(n);
  const CycleDecomposition below = remove_largest(c, 1);
  Slot slot{SlotKind::End, 0};
  if (pred != n) {
    const auto labeled = label_second(below);
    const auto it = std::find_if(labeled.labels.begin(), labeled.labels.end(),
                                 [&](const CycleLabel& l) { return l.after == pred; });
    if (it == labeled.labels.end())
      throw ValidationError("psi_inverse: " + c.to_string() + " follows a cyclic peak");
    slot = slot_from_label(it->kind, it->index);
  }
  const Permutation p = psi_inverse(below);
  return Permutation::trusted(insert_at(p.word(), gap_of_first_slot(p.word(), slot), n));
}

IdentityReport verify_phi(int n_max) {
  return check_range("phi", 1, n_max, [](int n) -> std::optional<std::string> {
    std::set<std::vector<int>> seen;
    for (const Permutation& p : gen_simsun_first(n)) {
      const int k = descents(p.word());
      const auto words = phi_words(p);
      if (words.size() != (std::size_t{1} << (n - k)))
        return "block of " + p.to_string() + " has size " + std::to_string(words.size());
      for (const auto& t : words) {
        if (interior_peaks(t) != k)
          return "pk(" + Permutation::trusted(t).to_string() + ") != des(" + p.to_string() + ")";
        if (!seen.insert(t).second)
          return "blocks overlap at " + Permutation::trusted(t).to_string() + ": " + block_text(words);
        if (phi_inverse(Permutation::trusted(t)) != p)
          return "phi_inverse(" + Permutation::trusted(t).to_string() + ") != " + p.to_string();
      }
    }
    if (Integer(static_cast<unsigned long>(seen.size())) != factorial(n + 1))
      return "blocks cover " + std::to_string(seen.size()) + " words of S_" + std::to_string(n + 1);
    return std::nullopt;
  });
}

IdentityReport verify_psi(int n_max) {
  return check_range("psi", 1, n_max, [](int n) -> std::optional<std::string> {
    std::set<CycleDecomposition> image;
    for (const Permutation& p : gen_simsun_first(n)) {
      const CycleDecomposition c = psi_forward(p);
      const Permutation w = from_cycles(c);
      if (!is_simsun_second(w))
        return "psi(" + p.to_string() + ") = " + c.to_string() + " is not simsun of the second kind";
      if (excedances(w.word()) != descents(p.word()))
        return "exc(psi(" + p.to_string() + ")) != des";
      if (!image.insert(c).second)
        return "psi is not injective at " + c.to_string();
      if (psi_inverse(c) != p)
        return "psi_inverse(" + c.to_string() + ") != " + p.to_string();
    }
    std::size_t second = 0;
    for_each_simsun_second(n, [&](std::span<const int>) { ++second; });
    if (second != image.size())
      return "|SS_" + std::to_string(n) + "| = " + std::to_string(second) + " but the image has " +
             std::to_string(image.size());
    return std::nullopt;
  });
}

} // namespace simsun
