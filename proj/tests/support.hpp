#pragma once

#include "dnoether/cone.hpp"
#include "dnoether/errors.hpp"

#include <optional>
#include <random>
#include <vector>

namespace dnoether::testing {

inline ConePtr cone_of(std::initializer_list<std::vector<long long>> cols) {
  std::vector<IntVector> out;
  for (const auto& c : cols) out.push_back(make_vector(c));
  return build_cone(GeneratorMatrix::from_columns(static_cast<Eigen::Index>(out.front().size()), out));
}

inline ConePtr eight_generator_plane() {
  IntMatrix a(2, 8);
  a << 0, 1, 3, 3, 4, 4, 6, 6, 2, 1, 1, 2, 0, 1, 0, 1;
  return build_cone(GeneratorMatrix::from_matrix(a));
}

// ℕ² with the single point (0,1) removed.
inline ConePtr punctured_plane() { return cone_of({{1, 0}, {0, 2}, {0, 3}, {1, 1}}); }

inline ConePtr orthant(int d) {
  std::vector<IntVector> e;
  for (int i = 0; i < d; ++i) e.push_back(IntVector::Unit(d, i));
  return build_cone(GeneratorMatrix::from_columns(d, e));
}

// Random d = 2 generator matrix with entries in [0, 6] and 2..8 columns satisfying both
// standing assumptions.
inline ConePtr random_plane_semigroup(std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(0, 6), count(2, 8);
  for (;;) {
    const int n = count(rng);
    std::vector<IntVector> cols;
    for (int j = 0; j < n; ++j) cols.push_back(make_vector({entry(rng), entry(rng)}));
    try {
      return build_cone(GeneratorMatrix::from_columns(2, cols));
    } catch (const AssumptionViolation&) {
    }
  }
}

inline IntVector v2(long long a, long long b) { return make_vector({a, b}); }

}  // namespace dnoether::testing
