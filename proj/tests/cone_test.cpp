#include "dnoether/cone.hpp"
#include "dnoether/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dnoether;

namespace {

GeneratorMatrix eight_generator_plane() {
  IntMatrix a(2, 8);
  a << 0, 1, 3, 3, 4, 4, 6, 6, 2, 1, 1, 2, 0, 1, 0, 1;
  return GeneratorMatrix::from_matrix(a);
}

GeneratorMatrix cols(std::initializer_list<std::vector<long long>> cs) {
  std::vector<IntVector> out;
  for (const auto& c : cs) out.push_back(make_vector(c));
  return GeneratorMatrix::from_columns(static_cast<Eigen::Index>(out.front().size()), out);
}

}  // namespace

TEST(Cone, EightGeneratorPlane) {
  FaceLattice c(eight_generator_plane());
  ASSERT_EQ(c.facet_count(), 2);
  EXPECT_TRUE(equal(c.facet(0).normal, make_vector({0, 1})));
  EXPECT_TRUE(equal(c.facet(1).normal, make_vector({1, 0})));
  EXPECT_EQ(c.face_count(), 4);
  EXPECT_EQ(c.face(c.full_cone()).dim, 2);
  EXPECT_EQ(c.face(c.zero_face()).dim, 0);
  EXPECT_EQ(c.facet_face(0), 1);
  EXPECT_EQ(c.face(1).span, IntLattice::span(2, {make_vector({2, 0})}));
  EXPECT_EQ(c.face(2).span, IntLattice::span(2, {make_vector({0, 2})}));
  EXPECT_EQ(c.face(1).generator_indices, (std::vector<int>{4, 6}));
  EXPECT_EQ(c.face(1).torsion.size(), 2u);
  EXPECT_EQ(c.face_of_indices({4}), 1);
  EXPECT_EQ(c.face_of_indices({}), c.zero_face());
  EXPECT_EQ(c.face_of_indices({0, 1, 2, 3, 4, 5, 6, 7}), c.full_cone());
  EXPECT_EQ(c.face_name(1), "sigma1");
  EXPECT_EQ(c.face_name(3), "{0}");
}

TEST(Cone, UnitOrthant) {
  for (int d = 1; d <= 4; ++d) {
    std::vector<IntVector> e;
    for (int i = 0; i < d; ++i) e.push_back(IntVector::Unit(d, i));
    FaceLattice c(GeneratorMatrix::from_columns(d, e));
    EXPECT_EQ(c.facet_count(), d);
    EXPECT_EQ(c.face_count(), 1 << d);
    for (int k = 0; k < d; ++k) {
      // Facets are ordered lexicographically by normal, so e_d comes first.
      EXPECT_TRUE(equal(c.facet(k).normal, IntVector::Unit(d, d - 1 - k)));
    }
  }
}

TEST(Cone, CrossProductNormals) {
  // {(1,0),(1,2)} spans an index-2 sublattice, so the normals are checked directly and then
  // on the same cone with (1,1) added.
  const auto normals = facet_normals(2, {make_vector({1, 0}), make_vector({1, 2})});
  ASSERT_EQ(normals.size(), 2u);
  EXPECT_TRUE(equal(normals[0], make_vector({0, 1})));
  EXPECT_TRUE(equal(normals[1], make_vector({2, -1})));
  EXPECT_THROW(FaceLattice(cols({{1, 0}, {1, 2}})), NotFullRank);
  FaceLattice c(cols({{1, 0}, {1, 2}, {1, 1}}));
  ASSERT_EQ(c.facet_count(), 2);
  EXPECT_TRUE(equal(c.facet(0).normal, make_vector({0, 1})));
  EXPECT_TRUE(equal(c.facet(1).normal, make_vector({2, -1})));
}

TEST(Cone, AssumptionChecks) {
  EXPECT_THROW(FaceLattice(cols({{1, 0}, {-1, 0}})), NotStronglyConvex);
  EXPECT_THROW(FaceLattice(cols({{1, 0}, {-1, 1}, {0, -1}})), NotStronglyConvex);
  EXPECT_THROW(FaceLattice(cols({{2, 0}, {0, 2}})), NotFullRank);
  EXPECT_THROW(FaceLattice(cols({{1, 0}})), NotFullRank);
  EXPECT_NO_THROW(FaceLattice(cols({{1, 0}, {0, 1}, {0, 0}, {1, 0}})));
}

TEST(Cone, ZeroAndDuplicateColumns) {
  FaceLattice c(cols({{1, 0}, {0, 1}, {0, 0}, {1, 0}}));
  EXPECT_TRUE(c.has_zero_column());
  EXPECT_EQ(c.generators().size(), 2u);
  EXPECT_EQ(c.face(c.zero_face()).generator_indices, (std::vector<int>{2}));
  EXPECT_EQ(c.face_of_indices({3}), c.face_of_indices({0}));
}

TEST(Cone, ThreeDimensionalNonSimplicial) {
  // Square pyramid: four facets, four rays.
  FaceLattice c(cols({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, 1}}));
  EXPECT_EQ(c.facet_count(), 4);
  int rays = 0;
  for (const auto& f : c.faces()) rays += f.dim == 1;
  EXPECT_EQ(rays, 4);
  EXPECT_EQ(c.face_count(), 1 + 4 + 4 + 1);
}

// Facet properties on random d = 2, 3 inputs, plus a brute-force facet count in d = 2.
TEST(ConeProperties, SupportFunctionConditions) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(0, 5);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 2;
    const int n = d + static_cast<int>(rng() % 4);
    std::vector<IntVector> gs;
    for (int j = 0; j < n; ++j) {
      IntVector v(d);
      for (int k = 0; k < d; ++k) v[k] = coord(rng);
      gs.push_back(v);
    }
    std::unique_ptr<FaceLattice> c;
    try {
      c = std::make_unique<FaceLattice>(GeneratorMatrix::from_columns(d, gs));
    } catch (const AssumptionViolation&) {
      continue;
    }
    ++built;
    for (int k = 0; k < c->facet_count(); ++k) {
      const auto& f = c->facet(k);
      EXPECT_EQ(content(f.normal), 1);
      int zeros = 0;
      for (const auto& g : gs) {
        EXPECT_GE(f(g), 0);
        zeros += f(g) == 0;
      }
      EXPECT_GT(zeros, 0);
    }
    for (const auto& f : c->faces())
      for (const auto& g : c->faces())
        if (c->leq(f.id, g.id) && f.id != g.id) EXPECT_LT(f.dim, g.dim);
    for (const auto& f : c->faces())
      for (const auto& g : c->faces()) {
        const auto m = c->meet(f.id, g.id);
        EXPECT_TRUE(c->leq(m, f.id) && c->leq(m, g.id));
      }
    if (d == 2) EXPECT_EQ(c->facet_count(), 2);
  }
  EXPECT_GT(built, 100);
}
