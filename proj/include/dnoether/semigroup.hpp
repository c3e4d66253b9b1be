#pragma once

#include "dnoether/combinatorial_set.hpp"
#include "dnoether/inference.hpp"

#include <memory>
#include <mutex>
#include <unordered_set>

namespace dnoether {

// v ∈ ℕA, by dynamic programming over {x : 0 ≤ F_σ(x) ≤ F_σ(v)}.
bool na_member(const IntVector& v, const FaceLattice& cone);
// v ∈ ℕ(A∩τ).
bool face_semigroup_member(const IntVector& v, const FaceLattice& cone, FaceId face);

ValueSet facet_value_set(const FaceLattice& cone, int facet);
std::vector<ValueSet> semigroup_values(const FaceLattice& cone);

// ℕA as a LatticeSetView. Membership uses a cached DP table that grows on demand; the
// localization ℕA + ℤ(A∩τ) is decided by a search over classes modulo ℤ(A∩τ).
class SemigroupView : public LatticeSetView {
 public:
  explicit SemigroupView(ConePtr cone);
  ~SemigroupView() override;

  const FaceLattice& cone() const override { return *cone_; }
  const std::vector<ValueSet>& facet_values() const override { return values_; }
  bool contains(const IntVector& v) const override;
  bool contains_localized(const IntVector& v, FaceId face) const override;
  std::vector<char> members(const Region& region) const override;

 private:
  struct Table;
  struct Classes;
  void ensure_table(const std::vector<std::int64_t>& heights) const;
  bool lookup(const std::int64_t* p, const std::int64_t* values) const;

  ConePtr cone_;
  std::vector<ValueSet> values_;
  mutable std::mutex mutex_;
  mutable std::unique_ptr<Table> table_;
  mutable std::vector<std::unique_ptr<Classes>> classes_;
};

// The standard expression of ℕA.
CombinatorialSet standard_expression(const ConePtr& cone, const InferenceOptions& options = {},
                                     InferenceReport* report = nullptr);

struct DeepInteriorResult {
  enum class Reason { Member, NotInFaceSemigroup, BelowThreshold };
  bool member = false;
  Reason reason = Reason::Member;
};

// v ∈ ℕ(A∩τ) with F_σ(v) ≥ M for every facet σ not containing τ.
DeepInteriorResult deep_interior(const FaceLattice& cone, FaceId face, const Integer& m, const IntVector& v);

}  // namespace dnoether
