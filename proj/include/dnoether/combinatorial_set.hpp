#pragma once

#include "dnoether/cone.hpp"
#include "dnoether/value_set.hpp"
#include "dnoether/window.hpp"

#include <vector>

namespace dnoether {

// Read access to a lattice set T that is stable under adding ℕA: facet value sets, membership,
// and membership in the localizations T + ℤ(A∩τ).
class LatticeSetView {
 public:
  virtual ~LatticeSetView() = default;
  virtual const FaceLattice& cone() const = 0;
  virtual const std::vector<ValueSet>& facet_values() const = 0;
  virtual bool contains(const IntVector& v) const = 0;
  virtual bool contains_localized(const IntVector& v, FaceId face) const = 0;
  // Membership of every point of a region. The default calls contains() pointwise.
  virtual std::vector<char> members(const Region& region) const;

  bool in_scored(const IntVector& v) const;
};

// Membership bitmap of a view over a box, through the view's bulk query.
BoxOracle box_oracle(const LatticeSetView& view, const Box& box);

struct ExcludedCoset {
  FaceId face = 0;
  IntVector rep;     // canonical representative modulo ℤ(A∩τ)
  IntVector anchor;  // lowest point of the coset inside the scored part

  bool contains(const FaceLattice& cone, const IntVector& v) const {
    return cone.face(face).span.congruent(v, rep);
  }
};

enum class SetKind { Semigroup, General };

// S = S_c ∖ ⋃ (b_i + ℤ(A∩τ_i)), with S_c cut out by one value set per facet.
class CombinatorialSet : public LatticeSetView {
 public:
  CombinatorialSet(ConePtr cone, std::vector<ValueSet> values, std::vector<ExcludedCoset> excluded,
                   SetKind kind = SetKind::General);

  const FaceLattice& cone() const override { return *cone_; }
  const ConePtr& cone_ptr() const { return cone_; }
  const std::vector<ValueSet>& facet_values() const override { return values_; }
  const std::vector<ExcludedCoset>& excluded() const { return excluded_; }
  SetKind kind() const { return kind_; }

  bool contains(const IntVector& v) const override;
  bool contains_localized(const IntVector& v, FaceId face) const override;
  std::vector<char> members(const Region& region) const override;

  CombinatorialSet scored() const;
  CombinatorialSet s2() const;
  bool is_s2() const;
  Integer big_m() const;
  CombinatorialSet translated(const IntVector& shift) const;
  // Facets together with every face carrying an excluded coset, ascending by id.
  std::vector<FaceId> f_tilde() const;

  // Same value sets and same excluded cosets (faces and canonical representatives).
  bool same_expression(const CombinatorialSet& other) const;

 private:
  ConePtr cone_;
  std::vector<ValueSet> values_;
  std::vector<ExcludedCoset> excluded_;
  SetKind kind_;
};

// The smallest M with M > max(gaps ∪ {F_σ(b_i)}) − min F_σ(S_c) for every facet; an empty max
// counts as the floor of the value set.
Integer big_m(const FaceLattice& cone, const std::vector<ValueSet>& values,
              const std::vector<ExcludedCoset>& excluded);

// (d + S) ∩ S_c ∩ (b_i + ℤ(A∩τ_i)) ≠ ∅, decided as b_i − d ∈ S + ℤ(A∩τ_i).
bool three_way_witness(const IntVector& d, const CombinatorialSet& s, std::size_t i);

}  // namespace dnoether
