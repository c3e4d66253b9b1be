#pragma once

#include "dnoether/combinatorial_set.hpp"
#include "dnoether/inference.hpp"

#include <optional>
#include <vector>

namespace dnoether {

// (b_τ) for τ in F̃, each b_τ a canonical representative of (Kτ ∩ ℤ^d) / ℤ(A∩τ).
struct BTuple {
  std::vector<FaceId> faces;  // F̃, ascending
  std::vector<IntVector> reps;

  const IntVector& at(FaceId face) const;
  bool is_zero() const;
};

// Every compatible tuple: for each coset i and each τ ∈ F̃ above τ_i there is a coset j on τ with
// b_i + b_{τ_i} ≡ b_j + b_τ mod ℤ(A∩τ). Ordered lexicographically by the representatives.
std::vector<BTuple> compute_b(const CombinatorialSet& s);

// {a : −a − b_τ ∉ base + ℤ(A∩τ) for each τ in faces}. With faces = F̃(S) and base = S this is
// ω(S); with base = ω(S) it reflects back.
class DualView : public LatticeSetView {
 public:
  DualView(const CombinatorialSet& base, BTuple b);

  const FaceLattice& cone() const override { return base_.cone(); }
  const std::vector<ValueSet>& facet_values() const override { return values_; }
  bool contains(const IntVector& a) const override;
  // ω + ℤ(A∩τ): the condition is imposed only for the faces of the tuple above τ.
  bool contains_localized(const IntVector& a, FaceId face) const override;

 private:
  const CombinatorialSet& base_;
  BTuple b_;
  std::vector<ValueSet> values_;
};

struct OmegaSet {
  CombinatorialSet base;
  BTuple chosen_b;
};

// ω(S) in standard form. Without a tuple the lexicographically smallest element of 𝓑 is used;
// EmptyB is raised when 𝓑 = ∅.
OmegaSet omega(const CombinatorialSet& s, const BTuple& b, const InferenceOptions& options = {});
OmegaSet omega(const CombinatorialSet& s, const InferenceOptions& options = {});

// ω(ω(S)) with the same tuple.
CombinatorialSet reflect(const CombinatorialSet& s, const BTuple& b, const InferenceOptions& options = {});

// The shift a with ω(S) = a + S, if any.
std::optional<IntVector> self_duality_shift(const CombinatorialSet& s, const OmegaSet& w);
std::optional<IntVector> self_duality_shift(const CombinatorialSet& s, const BTuple& b);

// The unique rational solution of F_σ(a) = levels[σ] for all facets, when it is integral.
std::optional<IntVector> solve_facet_levels(const FaceLattice& cone, const std::vector<Integer>& levels);

}  // namespace dnoether
