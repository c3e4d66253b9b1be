#pragma once

#include "dnoether/combinatorial_set.hpp"

#include <vector>

namespace dnoether {

// sign · (F_σ(s) − shift)
struct LinearFactor {
  int facet = 0;
  Integer shift;
  int sign = 1;

  friend bool operator==(const LinearFactor& a, const LinearFactor& b) {
    return a.facet == b.facet && a.shift == b.shift && a.sign == b.sign;
  }
};

// The affine subspace point + Kτ. The point is canonical modulo ℚτ ∩ ℤ^d.
struct AffineComponent {
  FaceId face = 0;
  IntVector point;

  bool contains(const FaceLattice& cone, const IntVector& v) const {
    return cone.face(face).saturation.congruent(v, point);
  }
};

AffineComponent affine_component(const FaceLattice& cone, FaceId face, const IntVector& point);

// Irreducible components of a Zariski closure: hyperplanes F_σ = k and affine subspaces.
// Normalized: sorted, deduplicated, and no component is contained in another.
struct ZCDecomposition {
  std::vector<std::pair<int, Integer>> hyperplanes;  // (facet, level)
  std::vector<AffineComponent> cosets;

  bool empty() const { return hyperplanes.empty() && cosets.empty(); }
  bool contains(const FaceLattice& cone, const IntVector& v) const;
  friend bool operator==(const ZCDecomposition& a, const ZCDecomposition& b);
};

ZCDecomposition normalize(const FaceLattice& cone, std::vector<std::pair<int, Integer>> hyperplanes,
                          std::vector<AffineComponent> cosets);

// The degree-a piece t^a · ⟨p_a⟩ · ⋂ I(b_i − a + Kτ_i) of a ring of differential operators, or
// the formal adjoint of one.
struct GradedPiece {
  IntVector degree;
  std::vector<LinearFactor> p_factors;
  std::vector<AffineComponent> components;
  std::vector<std::size_t> coset_indices;  // excluded cosets behind the components, when known

  // p_a(d) = 0 or d lies on some component.
  bool vanishes_at(const FaceLattice& cone, const IntVector& d) const;
  ZCDecomposition zero_set(const FaceLattice& cone) const;
};

// Ω_{S,S′}(a) = S ∖ (−a + S′) inside the box, lexicographic.
std::vector<IntVector> omega_set_points(const LatticeSetView& s, const LatticeSetView& s_prime, const IntVector& a,
                                        const Box& box);

// {k ∈ V : k + shift ∉ V}; finite because V contains a final ray.
std::vector<Integer> missing_levels(const ValueSet& v, const Integer& shift);

// Factors F_σ(s) − k of p_a for the scored set cut out by the value sets.
std::vector<LinearFactor> p_polynomial(const FaceLattice& cone, const std::vector<ValueSet>& values, const IntVector& a);

// ZC(Ω_{S,S′}(a)) for S′ with the same scored closure as S: the hyperplanes of p_a and, for each
// excluded coset b_i + ℤ(A∩τ_i) of S′ with b_i − a ∈ S + ℤ(A∩τ_i), the subspace b_i − a + Kτ_i.
ZCDecomposition zc_decomposition(const CombinatorialSet& s, const CombinatorialSet& s_prime, const IntVector& a);
ZCDecomposition zc_decomposition(const CombinatorialSet& s, const IntVector& a);

GradedPiece graded_piece(const CombinatorialSet& s, const IntVector& a);

// t^a f(s) ↦ f(−s) t^a = t^a f(−s − a): factor (σ, k) becomes −(F_σ(s) − (−k − F_σ(a))) and
// each component c + Kτ becomes −a − c + Kτ.
GradedPiece formal_adjoint(const FaceLattice& cone, const GradedPiece& piece);

// Every point of Ω_S(a + b) in the box lies in ZC(Ω_S(a)) ∪ (−a + ZC(Ω_S(b))).
bool product_inclusion_check(const CombinatorialSet& s, const IntVector& a, const IntVector& b, const Box& box);

}  // namespace dnoether
