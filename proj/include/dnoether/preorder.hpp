#pragma once

#include "dnoether/combinatorial_set.hpp"

#include <optional>
#include <vector>

namespace dnoether {

// E(S)_τ(α): classes λ of (ℚτ ∩ ℤ^d) / ℤ(A∩τ) with α − λ ∈ S + ℤ(A∩τ). Shifts are integral, so
// only classes inside ℤ^d can occur. Elements are canonical representatives in sorted order.
struct ESet {
  FaceId face = 0;
  std::vector<IntVector> elements;

  bool empty() const { return elements.empty(); }
  bool contains(const FaceLattice& cone, const IntVector& lambda) const;
  bool subset_of(const ESet& other) const;
  friend bool operator==(const ESet& a, const ESet& b);
};

ESet e_set(const LatticeSetView& s, FaceId face, const IntVector& alpha);

struct PreorderVerdict {
  bool holds = true;
  std::optional<FaceId> blocking_face;
  std::optional<std::size_t> blocking_coset;
};

// α ⪯_{S,τ} β: E-sets grow from α to β on every face above τ. Faces are checked from τ upward and
// the first failing one is reported.
PreorderVerdict preceq_tau(const LatticeSetView& s, FaceId face, const IntVector& alpha, const IntVector& beta);

// I(τ) + α ⪯_S I(τ) + α + a, through the facet condition and then the coset condition, cosets on
// smaller faces first.
PreorderVerdict preceq_s(const CombinatorialSet& s, FaceId face, const IntVector& alpha, const IntVector& a);

// The tuple of E-sets on every face above τ; two shifts are ∼_{S,τ}-equivalent iff these agree.
std::vector<ESet> signature(const LatticeSetView& s, FaceId face, const IntVector& alpha);

struct EquivalenceClass {
  std::vector<ESet> signature;
  std::vector<IntVector> points;  // lexicographic
};

// Partition of the box by ∼_{S,τ}, classes ordered by their first point.
std::vector<EquivalenceClass> equivalence_classes(const LatticeSetView& s, FaceId face, const Box& box);

struct StableClasses {
  Box box;
  std::vector<EquivalenceClass> classes;
};

// Classes on [−2MG, 2MG]^d, widened by M until the set of signatures stops changing.
StableClasses stable_equivalence_classes(const CombinatorialSet& s, FaceId face, int max_rounds = 6);

}  // namespace dnoether
