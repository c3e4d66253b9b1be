#include "dnoether/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace dnoether;

namespace {

IntVector v2(long long a, long long b) { return make_vector({a, b}); }

std::vector<IntVector> random_vectors(std::mt19937& rng, int dim, int count, int bound) {
  std::uniform_int_distribution<int> coord(-bound, bound);
  std::vector<IntVector> out;
  for (int i = 0; i < count; ++i) {
    IntVector v(dim);
    for (int k = 0; k < dim; ++k) v[k] = coord(rng);
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Hnf, SingleGenerator) {
  auto l = IntLattice::span(2, {v2(2, 0)});
  ASSERT_EQ(l.rank(), 1);
  EXPECT_TRUE(equal(l.basis()[0], v2(2, 0)));
}

TEST(Hnf, GcdOfCollinearGenerators) {
  EXPECT_EQ(IntLattice::span(2, {v2(4, 0), v2(6, 0)}), IntLattice::span(2, {v2(2, 0)}));
}

TEST(Hnf, IdentityIsFull) {
  EXPECT_EQ(IntLattice::span(2, {v2(1, 0), v2(0, 1)}), IntLattice::full(2));
  EXPECT_EQ(IntLattice::span(2, {v2(2, 1), v2(1, 1)}), IntLattice::full(2));
}

TEST(Hnf, DimensionMismatch) {
  EXPECT_THROW(IntLattice::span(2, {make_vector({1, 2, 3})}), DimensionMismatch);
}

TEST(Membership, Examples) {
  const auto x2 = IntLattice::span(2, {v2(2, 0)});
  const auto y2 = IntLattice::span(2, {v2(0, 2)});
  EXPECT_TRUE(x2.contains(v2(4, 0)));
  EXPECT_FALSE(x2.contains(v2(1, 0)));
  EXPECT_FALSE(y2.contains(v2(0, -1)));
}

TEST(CanonicalCoset, Examples) {
  const auto x2 = IntLattice::span(2, {v2(2, 0)});
  const auto y2 = IntLattice::span(2, {v2(0, 2)});
  EXPECT_TRUE(equal(x2.reduce(v2(3, 0)), v2(1, 0)));
  EXPECT_TRUE(equal(y2.reduce(v2(2, -1)), v2(2, 1)));
  EXPECT_TRUE(equal(x2.reduce(v2(0, 0)), v2(0, 0)));
  EXPECT_TRUE(equal(IntLattice(2).reduce(v2(0, 0)), v2(0, 0)));
}

TEST(GroupIndex, Examples) {
  IntMatrix a(2, 8);
  a << 0, 1, 3, 3, 4, 4, 6, 6, 2, 1, 1, 2, 0, 1, 0, 1;
  EXPECT_EQ(*group_index_full<Integer>(a), 1);
  EXPECT_EQ(*group_index_full<Integer>(columns_to_matrix({v2(2, 0), v2(0, 2)})), 4);
  EXPECT_FALSE(group_index_full<Integer>(columns_to_matrix({v2(1, 0)})).has_value());
}

TEST(Smith, InvariantFactors) {
  IntMatrix a(2, 2);
  a << 2, 0, 0, 3;
  EXPECT_EQ(smith_invariants<Integer>(a), (std::vector<Integer>{1, 6}));
  a << 2, 4, 6, 8;
  EXPECT_EQ(smith_invariants<Integer>(a), (std::vector<Integer>{2, 4}));
}

TEST(Saturation, Examples) {
  const auto l = IntLattice::span(2, {v2(2, 2)});
  const auto s = saturation(l);
  EXPECT_EQ(s, IntLattice::span(2, {v2(1, 1)}));
  const auto reps = quotient_representatives(s, l);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_TRUE(equal(reps[0], v2(0, 0)));
  EXPECT_TRUE(equal(reps[1], v2(1, 1)));

  const auto l3 = IntLattice::span(3, {make_vector({2, 0, 0}), make_vector({0, 3, 0})});
  EXPECT_EQ(saturation(l3), IntLattice::span(3, {make_vector({1, 0, 0}), make_vector({0, 1, 0})}));
  EXPECT_EQ(quotient_representatives(saturation(l3), l3).size(), 6u);
}

TEST(LatticeProperties, ReduceIsCanonical) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 4;
    const int count = trial % 4;
    const auto l = IntLattice::span(dim, random_vectors(rng, dim, count, 6));
    for (const auto& v : random_vectors(rng, dim, 5, 20)) {
      const auto r = l.reduce(v);
      EXPECT_TRUE(equal(l.reduce(r), r));
      EXPECT_TRUE(l.contains(IntVector(v - r)));
      for (const auto& w : random_vectors(rng, dim, 3, 4)) {
        IntVector shifted = v;
        for (const auto& b : l.basis()) shifted += (w[0] + 1) * b;
        EXPECT_TRUE(equal(l.reduce(shifted), r));
        EXPECT_EQ(l.contains(w), equal(l.reduce(w), l.reduce(IntVector::Zero(dim))));
      }
    }
  }
}

TEST(LatticeProperties, HnfInvariantUnderColumnOperations) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 4;
    auto gens = random_vectors(rng, dim, 1 + trial % 5, 7);
    const auto l = IntLattice::span(dim, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens)
      if (rng() % 2) g = -g;
    EXPECT_EQ(IntLattice::span(dim, gens), l);
    if (gens.size() > 1) {
      gens[0] += 3 * gens[1];
      EXPECT_EQ(IntLattice::span(dim, gens), l);
    }
  }
}

TEST(LatticeProperties, SaturationQuotientOrderMatchesSmith) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + trial % 3;
    const auto l = IntLattice::span(dim, random_vectors(rng, dim, 1 + trial % dim, 5));
    if (l.rank() == 0) continue;
    const auto s = saturation(l);
    EXPECT_EQ(s.rank(), l.rank());
    EXPECT_TRUE(s.contains(l));
    Integer order = 1;
    for (const auto& x : smith_invariants<Integer>(l.basis_matrix())) order *= x;
    EXPECT_EQ(Integer(quotient_representatives(s, l).size()), order);
  }
}

TEST(LatticeProperties, MachineIntegerScalar) {
  using L = Sublattice<long long>;
  Vector<long long> a(2), b(2), v(2);
  a << 4, 0;
  b << 6, 0;
  v << 3, -5;
  const auto l = L::span(2, {a, b});
  EXPECT_EQ(l.basis()[0][0], 2);
  const auto r = l.reduce(v);
  EXPECT_EQ(r[0], 1);
  EXPECT_EQ(r[1], -5);
  Matrix<long long> m(2, 2);
  m << 2, 0, 0, 2;
  EXPECT_EQ(*group_index_full<long long>(m), 4);
}
