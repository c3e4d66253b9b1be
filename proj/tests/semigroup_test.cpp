#include "dnoether/semigroup.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

using namespace dnoether;
using namespace dnoether::testing;

namespace {

void expect_coset(const ExcludedCoset& e, const IntVector& rep, FaceId face) {
  EXPECT_EQ(e.face, face);
  EXPECT_TRUE(equal(e.rep, rep)) << to_string(e.rep) << " vs " << to_string(rep);
}

}  // namespace

TEST(ValueSets, Construction) {
  const auto v = ValueSet::generated_by({2, 3});
  EXPECT_EQ(v.sporadic(), (std::vector<Integer>{0}));
  EXPECT_EQ(v.tail(), 2);
  EXPECT_EQ(v.gaps(), (std::vector<Integer>{1}));
  EXPECT_EQ(ValueSet::generated_by({1}), ValueSet({}, 0));
  EXPECT_EQ(ValueSet::generated_by({2, 1, 1, 2, 0, 1, 0, 1}), ValueSet({}, 0));
  EXPECT_EQ(ValueSet::generated_by({3, 5}), ValueSet({0, 3, 5, 6}, 8));
  EXPECT_EQ(ValueSet({0, 1, 2}, 3), ValueSet({}, 0));
  EXPECT_TRUE(v.contains(Integer(0)));
  EXPECT_FALSE(v.contains(std::int64_t{1}));
  EXPECT_FALSE(v.contains(std::int64_t{-1}));
  EXPECT_TRUE(v.contains(std::int64_t{7}));
  EXPECT_THROW(ValueSet::generated_by({2, 4}), std::invalid_argument);
}

TEST(ValueSets, ReflectedComplement) {
  // −(Z ∖ ℕ) = [1, ∞)
  EXPECT_EQ(ValueSet::reflected_complement(ValueSet({}, 0), {}, 0), ValueSet({}, 1));
  // −1 − ((Z ∖ ⟨2,3⟩) ∪ {}) = {−2} ∪ [0, ∞)
  EXPECT_EQ(ValueSet::reflected_complement(ValueSet::generated_by({2, 3}), {}, 1), ValueSet({-2}, 0));
}

TEST(Semigroup, NaMember) {
  const auto c = eight_generator_plane();
  EXPECT_FALSE(na_member(v2(2, 0), *c));
  EXPECT_TRUE(na_member(v2(4, 1), *c));
  EXPECT_TRUE(na_member(v2(0, 0), *c));
  EXPECT_FALSE(na_member(v2(-1, 3), *c));
}

TEST(Semigroup, FacetValueSets) {
  const auto c = eight_generator_plane();
  EXPECT_EQ(facet_value_set(*c, 0), ValueSet({}, 0));
  const auto d1 = cone_of({{2}, {3}});
  EXPECT_EQ(facet_value_set(*d1, 0), ValueSet({0}, 2));
  EXPECT_EQ(facet_value_set(*cone_of({{1}}), 0), ValueSet({}, 0));
}

TEST(Semigroup, StandardExpressionEightGeneratorPlane) {
  const auto c = eight_generator_plane();
  InferenceReport report;
  const auto s = standard_expression(c, {}, &report);
  ASSERT_EQ(s.excluded().size(), 5u);
  expect_coset(s.excluded()[0], v2(1, 0), 1);
  expect_coset(s.excluded()[1], v2(0, 1), 2);
  expect_coset(s.excluded()[2], v2(1, 0), 2);
  expect_coset(s.excluded()[3], v2(2, 1), 2);
  expect_coset(s.excluded()[4], v2(2, 0), 3);
  EXPECT_TRUE(equal(s.excluded()[3].anchor, v2(2, 1)));
  EXPECT_EQ(s.big_m(), 3);
  EXPECT_FALSE(s.is_s2());
  EXPECT_GE(report.rounds, 2);

  const auto sc = s.scored();
  EXPECT_TRUE(sc.excluded().empty());
  for (int x = -2; x <= 8; ++x)
    for (int y = -2; y <= 8; ++y) EXPECT_EQ(sc.contains(v2(x, y)), x >= 0 && y >= 0);

  const auto s2 = s.s2();
  EXPECT_EQ(s2.excluded().size(), 4u);
  for (int x = 0; x <= 8; ++x)
    for (int y = 0; y <= 8; ++y)
      EXPECT_EQ(s2.contains(v2(x, y)), na_member(v2(x, y), *c) || (x == 2 && y == 0)) << x << "," << y;
}

TEST(Semigroup, StandardExpressionSmallCases) {
  EXPECT_TRUE(standard_expression(orthant(2)).excluded().empty());
  const auto p = standard_expression(punctured_plane());
  ASSERT_EQ(p.excluded().size(), 1u);
  expect_coset(p.excluded()[0], v2(0, 1), p.cone().zero_face());
  EXPECT_TRUE(p.s2().excluded().empty());
  const auto one = standard_expression(cone_of({{2}, {3}}));
  EXPECT_TRUE(one.excluded().empty());
  EXPECT_TRUE(one.is_s2());
  EXPECT_EQ(one.big_m(), 2);
  EXPECT_EQ(standard_expression(orthant(2)).big_m(), 1);
  EXPECT_TRUE(standard_expression(orthant(2)).is_s2());
}

TEST(Semigroup, LocalizedMembership) {
  const auto s = standard_expression(eight_generator_plane());
  EXPECT_TRUE(s.contains_localized(v2(2, 0), 2));
  EXPECT_FALSE(s.contains_localized(v2(1, 4), 2));
  EXPECT_TRUE(s.contains_localized(v2(1, 5), 2));
  EXPECT_TRUE(s.contains_localized(v2(-7, -3), s.cone().full_cone()));
  SemigroupView view(s.cone_ptr());
  for (FaceId t = 0; t < s.cone().face_count(); ++t)
    for (int x = -6; x <= 10; ++x)
      for (int y = -6; y <= 10; ++y)
        EXPECT_EQ(view.contains_localized(v2(x, y), t), s.contains_localized(v2(x, y), t)) << t << " " << x << "," << y;
}

TEST(Semigroup, ThreeWayWitness) {
  const auto s = standard_expression(eight_generator_plane());
  EXPECT_FALSE(three_way_witness(v2(0, 0), s, 4));
  EXPECT_TRUE(three_way_witness(v2(-2, 0), s, 4));
  EXPECT_TRUE(three_way_witness(s.excluded()[4].rep, s, 4));
}

TEST(Semigroup, DeepInterior) {
  const auto c = eight_generator_plane();
  auto r = deep_interior(*c, 1, 3, v2(6, 0));
  EXPECT_TRUE(r.member);
  r = deep_interior(*c, 1, 3, v2(2, 0));
  EXPECT_FALSE(r.member);
  EXPECT_EQ(r.reason, DeepInteriorResult::Reason::NotInFaceSemigroup);
  r = deep_interior(*c, 1, 7, v2(6, 0));
  EXPECT_EQ(r.reason, DeepInteriorResult::Reason::BelowThreshold);
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= 6; ++y)
      EXPECT_EQ(deep_interior(*c, c->full_cone(), 3, v2(x, y)).member,
                na_member(v2(x, y), *c) && c->value(0, v2(x, y)) >= 3 && c->value(1, v2(x, y)) >= 3);
  EXPECT_TRUE(deep_interior(*c, c->zero_face(), 3, v2(0, 0)).member);
  EXPECT_FALSE(deep_interior(*c, c->zero_face(), 3, v2(1, 1)).member);
}

// Round trip, irredundancy, closures and the localization lemmas on random plane semigroups.
TEST(SemigroupProperties, RandomPlaneSemigroups) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const auto c = random_plane_semigroup(rng);
    const auto s = standard_expression(c);
    const auto m = to_int64(s.big_m());
    std::int64_t gmax = 0;
    for (const auto& g : c->generators()) gmax = std::max({gmax, to_int64(g[0]), to_int64(g[1])});
    const Box box = Box::cube(2, -2, gmax + 2 * m + 4);
    const SemigroupView view(c);
    const auto oracle = box_oracle(view, box);
    const auto symbolic = box_oracle(s, box);
    ASSERT_TRUE(oracle == symbolic) << "trial " << trial;

    // Every coset removes a point of S_c that no other coset removes.
    const Box far = Box::cube(2, -2, 3 * (gmax + m) + 8);
    const auto far_sc = box_oracle(s.scored(), far);
    std::vector<int> cover(static_cast<std::size_t>(far.size()), 0);
    std::vector<std::vector<std::uint64_t>> slices;
    for (const auto& e : s.excluded()) {
      std::vector<std::uint64_t> slice;
      const auto& basis = c->face(e.face).span.basis();
      ASSERT_LE(basis.size(), 1u);
      const std::int64_t reach = basis.empty() ? 0 : 4 * (far.hi[0] - far.lo[0] + 1);
      for (std::int64_t t = -reach; t <= reach; ++t) {
        const IntVector q = basis.empty() ? IntVector(e.rep) : IntVector(e.rep + t * basis[0]);
        if (!far.contains(q)) continue;
        const std::int64_t p[2] = {to_int64(q[0]), to_int64(q[1])};
        if (far_sc.member(p)) slice.push_back(far.index(p));
      }
      for (auto i : slice) ++cover[i];
      slices.push_back(std::move(slice));
    }
    for (std::size_t i = 0; i < slices.size(); ++i)
      EXPECT_TRUE(std::any_of(slices[i].begin(), slices[i].end(), [&](std::uint64_t j) { return cover[j] == 1; }))
          << "trial " << trial << " coset " << i << " is redundant";

    EXPECT_TRUE(s.scored().scored().same_expression(s.scored()));
    EXPECT_TRUE(s.s2().s2().same_expression(s.s2()));
    const auto s2 = box_oracle(s.s2(), box);
    const auto sc = box_oracle(s.scored(), box);
    for (std::size_t i = 0; i < oracle.bits().size(); ++i) {
      if (oracle.bits()[i]) EXPECT_TRUE(s2.bits()[i]);
      if (s2.bits()[i]) EXPECT_TRUE(sc.bits()[i]);
    }

    // Adding deep-interior elements keeps points inside S.
    for (FaceId t = 0; t < c->face_count(); ++t) {
      const auto& gens = c->face(t).generators;
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j)
          for (std::int64_t k = 1; k <= m + 1; k += m) {
            const IntVector a = k * c->generators()[static_cast<std::size_t>(gens[i])] +
                                (m + 1) * c->generators()[static_cast<std::size_t>(gens[j])];
            if (!deep_interior(*c, t, s.big_m(), a).member) continue;
            for (std::int64_t u = 0; u <= 6; ++u)
              for (std::int64_t w = 0; w <= 6; ++w)
                if (oracle.member(v2(u, w))) EXPECT_TRUE(s.contains(IntVector(v2(u, w) + a)));
          }
    }

    // Three-way witness: right side symbolic, left side by search in a box.
    const Box search = Box::cube(2, -4, 2 * (gmax + m) + 8);
    const auto wide = box_oracle(s, Box::cube(2, -7, 2 * (gmax + m) + 11));
    const auto wide_sc = box_oracle(s.scored(), search);
    for (std::size_t i = 0; i < s.excluded().size(); ++i) {
      std::vector<std::array<std::int64_t, 2>> slice;
      for (std::int64_t x = search.lo[0]; x <= search.hi[0]; ++x)
        for (std::int64_t y = search.lo[1]; y <= search.hi[1]; ++y) {
          const std::int64_t p[2] = {x, y};
          if (wide_sc.member(p) && s.excluded()[i].contains(*c, v2(x, y))) slice.push_back({x, y});
        }
      for (int dx = -3; dx <= 3; ++dx)
        for (int dy = -3; dy <= 3; ++dy) {
          bool left = false;
          for (const auto& p : slice) {
            const std::int64_t q[2] = {p[0] - dx, p[1] - dy};
            if ((left = wide.member(q))) break;
          }
          EXPECT_EQ(left, three_way_witness(v2(dx, dy), s, i)) << "trial " << trial << " coset " << i;
        }
    }

    // Facet values of S equal those of S_c.
    const auto pts = enumerate_box(*c, box);
    for (int k = 0; k < c->facet_count(); ++k) {
      const auto& vals = s.facet_values()[static_cast<std::size_t>(k)];
      std::set<std::int64_t> hit;
      for (std::size_t i = 0; i < pts.points.size(); ++i)
        if (oracle.bits()[i]) hit.insert(pts.values_at(i)[k]);
      for (auto lvl = to_int64(vals.floor()); lvl <= to_int64(vals.tail()) + 2; ++lvl)
        EXPECT_EQ(hit.count(lvl) > 0, vals.contains(lvl)) << "facet " << k << " level " << lvl;
    }
  }
}
