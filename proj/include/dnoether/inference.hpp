#pragma once

#include "dnoether/combinatorial_set.hpp"

#include <cstdint>

namespace dnoether {

struct InferenceOptions {
  std::size_t point_budget = kDefaultPointBudget;
  int max_rounds = 10;
  std::int64_t min_window = 0;
};

struct InferenceReport {
  std::int64_t window = 0;     // K: the final window is floor_σ ≤ F_σ ≤ floor_σ + K
  int rounds = 0;
  std::size_t points = 0;      // points in the final window
  std::size_t holes = 0;       // points of S_c ∖ T in the final window
};

// Recovers the standard expression of an ℕA-stable set T from membership queries.
//
// Every hole p of T in the window {floor_σ ≤ F_σ ≤ floor_σ + K} yields the maximal faces τ with
// p ∉ T + ℤ(A∩τ); the cosets p + ℤ(A∩τ) found this way are exactly the maximal cosets of S_c
// missing T. K grows until the coset list is unchanged between two windows and K is at least
// 2·(M + G) plus the widest facet value spread, where G bounds the facet values of the
// generators. The result is checked point by point against T on the final window.
CombinatorialSet infer_standard_form(const LatticeSetView& view, const ConePtr& cone, SetKind kind,
                                     const InferenceOptions& options = {}, InferenceReport* report = nullptr);

// Largest facet value of any generator.
Integer generator_height(const FaceLattice& cone);

}  // namespace dnoether
