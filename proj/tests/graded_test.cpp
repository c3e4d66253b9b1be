#include "dnoether/graded.hpp"
#include "dnoether/semigroup.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace dnoether;
using namespace dnoether::testing;

TEST(OmegaSets, Examples) {
  const auto plane = standard_expression(orthant(2));
  const auto pts = omega_set_points(plane, plane, v2(-1, 0), Box::cube(2, 0, 5));
  ASSERT_EQ(pts.size(), 6u);
  for (int y = 0; y <= 5; ++y) EXPECT_TRUE(equal(pts[static_cast<std::size_t>(y)], v2(0, y)));
  EXPECT_TRUE(omega_set_points(plane, plane, v2(0, 0), Box::cube(2, -3, 5)).empty());

  const auto s = standard_expression(eight_generator_plane());
  const auto diff = omega_set_points(s.s2(), s, v2(0, 0), Box::cube(2, -2, 12));
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_TRUE(equal(diff[0], v2(2, 0)));
}

TEST(PPolynomial, Examples) {
  const auto plane = standard_expression(orthant(2));
  auto p = p_polynomial(plane.cone(), plane.facet_values(), v2(-1, 0));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].facet, 1);  // F = first coordinate
  EXPECT_EQ(p[0].shift, 0);
  EXPECT_TRUE(p_polynomial(plane.cone(), plane.facet_values(), v2(3, 0)).empty());

  const auto line = standard_expression(cone_of({{2}, {3}}));
  p = p_polynomial(line.cone(), line.facet_values(), make_vector({-2}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].shift, 0);
  EXPECT_EQ(p[1].shift, 3);
  EXPECT_EQ(missing_levels(ValueSet::generated_by({2, 3}), 1), (std::vector<Integer>{0}));
  EXPECT_EQ(missing_levels(ValueSet::generated_by({3, 5}), 5), (std::vector<Integer>{}));
}

TEST(ZCDecompositions, Examples) {
  const auto plane = standard_expression(orthant(2));
  auto z = zc_decomposition(plane, v2(-1, 0));
  EXPECT_EQ(z.hyperplanes, (std::vector<std::pair<int, Integer>>{{1, 0}}));
  EXPECT_TRUE(z.cosets.empty());

  const auto s = standard_expression(eight_generator_plane());
  EXPECT_TRUE(zc_decomposition(s, v2(0, 0)).empty());
  // Levels 0 and 1 of the first coordinate come from p_a; the columns x = 3 and x = 4 from the
  // cosets (1,0) and (2,1) + ℤ(0,2). The point (4,0) from the point coset lies on x = 4.
  z = zc_decomposition(s, v2(-2, 0));
  EXPECT_EQ(z.hyperplanes, (std::vector<std::pair<int, Integer>>{{1, 0}, {1, 1}, {1, 3}, {1, 4}}));
  EXPECT_TRUE(z.cosets.empty());
  const auto g = graded_piece(s, v2(-2, 0));
  EXPECT_EQ(g.coset_indices, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_TRUE(g.zero_set(s.cone()) == z);
}

TEST(GradedPieces, EightGeneratorPlane) {
  const auto s = standard_expression(eight_generator_plane());
  const auto zero = graded_piece(s, v2(0, 0));
  EXPECT_TRUE(zero.p_factors.empty());
  EXPECT_TRUE(zero.coset_indices.empty());
  const auto g = graded_piece(s, v2(4, 1));
  EXPECT_TRUE(g.p_factors.empty());
  for (std::size_t i = 0; i < s.excluded().size(); ++i) {
    const bool listed = std::count(g.coset_indices.begin(), g.coset_indices.end(), i) > 0;
    EXPECT_EQ(listed, three_way_witness(v2(4, 1), s, i));
  }
  const auto plane = standard_expression(orthant(2));
  EXPECT_TRUE(graded_piece(plane, v2(-3, 2)).components.empty());
}

TEST(GradedPieces, FormalAdjoint) {
  const auto s = standard_expression(eight_generator_plane());
  const FaceLattice& cone = s.cone();
  const auto one = graded_piece(s, v2(3, 1));
  const auto adj_one = formal_adjoint(cone, one);
  EXPECT_EQ(adj_one.p_factors.size(), one.p_factors.size());
  const auto g = graded_piece(s, v2(-2, 0));
  const auto adj = formal_adjoint(cone, g);
  ASSERT_EQ(adj.p_factors.size(), 2u);
  EXPECT_EQ(adj.p_factors[0], (LinearFactor{1, 2, -1}));
  EXPECT_EQ(adj.p_factors[1], (LinearFactor{1, 1, -1}));
  const auto back = formal_adjoint(cone, adj);
  EXPECT_EQ(back.p_factors, g.p_factors);
  EXPECT_TRUE(back.zero_set(cone) == g.zero_set(cone));
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y)
      EXPECT_EQ(adj.vanishes_at(cone, v2(x, y)), g.vanishes_at(cone, IntVector(v2(2, 0) - v2(x, y))));
}

TEST(GradedPieces, ProductInclusion) {
  const auto s = standard_expression(eight_generator_plane());
  const Box box = Box::cube(2, -2, 12);
  EXPECT_TRUE(product_inclusion_check(s, v2(-1, 0), v2(-1, 0), box));
  EXPECT_TRUE(product_inclusion_check(s, v2(0, 0), v2(-3, 1), box));
  EXPECT_TRUE(product_inclusion_check(s, v2(2, -1), v2(0, 0), box));
}

// The factored description agrees with Ω_S(a) on lattice points of S, and p_a has the expected
// number of factors per facet.
TEST(GradedProperties, RandomPlaneSemigroups) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = standard_expression(random_plane_semigroup(rng));
    const auto& cone = s.cone();
    const Box box = Box::cube(2, -2, 14);
    const auto in_s = box_oracle(s, box);
    for (int sample = 0; sample < 10; ++sample) {
      const IntVector a = v2(coord(rng), coord(rng));
      const auto g = graded_piece(s, a);
      const auto omega = omega_set_points(s, s, a, box);
      std::vector<IntVector> described;
      for (std::int64_t x = box.lo[0]; x <= box.hi[0]; ++x)
        for (std::int64_t y = box.lo[1]; y <= box.hi[1]; ++y) {
          const auto d = v2(x, y);
          if (!in_s.member(d)) continue;
          bool zero = false;
          for (const auto& f : g.p_factors) zero = zero || cone.value(f.facet, d) == f.shift;
          for (auto i : g.coset_indices) zero = zero || s.excluded()[i].contains(cone, IntVector(d + a));
          if (zero) described.push_back(d);
          if (zero) EXPECT_TRUE(g.vanishes_at(cone, d));
        }
      ASSERT_EQ(described.size(), omega.size()) << "trial " << trial << " a " << to_string(a);
      for (std::size_t i = 0; i < omega.size(); ++i) EXPECT_TRUE(equal(described[i], omega[i]));

      for (int k = 0; k < cone.facet_count(); ++k) {
        const auto& v = s.facet_values()[static_cast<std::size_t>(k)];
        const auto fa = to_int64(cone.value(k, a));
        std::size_t count = 0;
        for (std::int64_t lvl = to_int64(v.floor()); lvl <= to_int64(v.tail()) + std::abs(fa) + 2; ++lvl)
          if (v.contains(lvl) && !v.contains(lvl + fa)) ++count;
        EXPECT_EQ(std::count_if(g.p_factors.begin(), g.p_factors.end(), [&](const LinearFactor& f) { return f.facet == k; }),
                  static_cast<std::ptrdiff_t>(count));
      }
      const IntVector b = v2(coord(rng), coord(rng));
      EXPECT_TRUE(product_inclusion_check(s, a, b, box));
    }
  }
}
