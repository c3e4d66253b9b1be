#pragma once

#include "dnoether/combinatorial_set.hpp"
#include "dnoether/graded.hpp"
#include "dnoether/inference.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dnoether {

// One excluded coset i with codim τ_i > 1 and the face cut out by the cosets aligned with it.
struct ConditionRow {
  std::size_t coset = 0;
  FaceId face = 0;          // τ_i
  FaceId intersection = 0;  // full cone when nothing is aligned
  std::vector<std::size_t> aligned;
  bool holds() const { return intersection == face; }
};

struct ConditionFourReport {
  std::vector<ConditionRow> rows;
  bool holds() const;
};

// For each deep coset i: ⋂ τ_j over facet cosets j with τ_j ≻ τ_i and b_i − b_j ∈ Kτ_j.
ConditionFourReport condition_four(const CombinatorialSet& s);

// Every deep coset sits at {0} and the facet cosets aligned with it meet only in {0}.
bool sufficient_facet_origin(const CombinatorialSet& s);

// First deep coset m for which ⋂ τ_i over all cosets with τ_i ≻ τ_m and b_i − b_m ∈ Kτ_i is
// strictly larger than τ_m.
std::optional<ConditionRow> necessary_violation(const CombinatorialSet& s);

// E(k) = (F_{σ_m} − F_{σ_m}(b_m)) · ∏ (F_{σ_i} − F_{σ_i}(b_i)) · P_{−k d_ρ}, the product running
// over the cosets i ≠ m with b_i + k d_ρ ∈ S + ℤ(A∩τ_i).
struct WitnessFamily {
  std::size_t bad_coset = 0;
  FaceId intersection = 0;
  FaceId ray = 0;
  IntVector ray_direction;  // primitive
  IntVector d_rho;
  int sigma_m = 0;  // facet ordinal
  struct Choice {
    std::size_t coset;
    int facet;
  };
  std::vector<Choice> sigma_choices;  // cosets that may contribute, ascending
  std::vector<std::size_t> never_contributing;
  std::int64_t k0 = 1;

  std::vector<std::size_t> contributing(const CombinatorialSet& s, std::int64_t k) const;
  // Polynomial part of E(k) as factors sign·(F_σ(s) − shift), leading factor first.
  std::vector<LinearFactor> factors(const CombinatorialSet& s, std::int64_t k) const;
  std::string describe(const CombinatorialSet& s) const;
};

WitnessFamily build_witness(const CombinatorialSet& s, const ConditionRow& violation);

struct WitnessCheck {
  std::int64_t k = 0;
  bool leading_coset_reached = false;    // b_m + k d_ρ ∈ S + ℤ(A∩τ_m)
  bool aligned_cosets_missed = false;    // b_i + k d_ρ ∉ S + ℤ(A∩τ_i) for the aligned cosets above τ_m
  bool in_graded_piece = false;          // E(k) vanishes on every component of D(S)_{−k d_ρ}
  bool not_divisible = false;            // the product part does not vanish on b_m + Kτ_m
  bool ok() const { return leading_coset_reached && aligned_cosets_missed && in_graded_piece && not_divisible; }
};

WitnessCheck check_witness(const CombinatorialSet& s, const WitnessFamily& w, std::int64_t k);

enum class LeftAnswer { Yes, No, Unknown };
enum class Reason { BNonempty, S2Condition, FiniteDiffOriginIntersection, NecessaryConditionViolated, ConjectureOpen };

std::string to_string(LeftAnswer a);
std::string to_string(Reason r);
std::string citation(Reason r);
inline const char* right_citation() { return "right-noetherian-always"; }

struct Verdict {
  bool right_noetherian = true;
  LeftAnswer left = LeftAnswer::Unknown;
  Reason reason = Reason::ConjectureOpen;
  bool s2 = false;  // S satisfies (S2); reported alongside B_NONEMPTY
  bool b_nonempty = false;
  bool sufficient_origin = false;
  std::optional<WitnessFamily> witness;
  ConditionFourReport condition_four;
  bool d_le_2_decisive = false;
};

// S must be ℕA in standard form.
Verdict verdict(const CombinatorialSet& s);

}  // namespace dnoether
