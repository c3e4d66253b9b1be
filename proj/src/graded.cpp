#include "dnoether/graded.hpp"

#include <algorithm>

namespace dnoether {

AffineComponent affine_component(const FaceLattice& cone, FaceId face, const IntVector& point) {
  return {face, cone.face(face).saturation.reduce(point)};
}

bool ZCDecomposition::contains(const FaceLattice& cone, const IntVector& v) const {
  for (const auto& [k, level] : hyperplanes)
    if (cone.value(k, v) == level) return true;
  return std::any_of(cosets.begin(), cosets.end(), [&](const AffineComponent& c) { return c.contains(cone, v); });
}

bool operator==(const ZCDecomposition& a, const ZCDecomposition& b) {
  if (a.hyperplanes != b.hyperplanes || a.cosets.size() != b.cosets.size()) return false;
  for (std::size_t i = 0; i < a.cosets.size(); ++i)
    if (a.cosets[i].face != b.cosets[i].face || !equal(a.cosets[i].point, b.cosets[i].point)) return false;
  return true;
}

ZCDecomposition normalize(const FaceLattice& cone, std::vector<std::pair<int, Integer>> hyperplanes,
                          std::vector<AffineComponent> cosets) {
  ZCDecomposition out;
  std::vector<AffineComponent> rest;
  for (auto& c : cosets) {
    if (cone.is_facet(c.face)) {
      const int k = cone.facet_index(c.face);
      hyperplanes.emplace_back(k, cone.value(k, c.point));
    } else {
      rest.push_back(affine_component(cone, c.face, c.point));
    }
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
  out.hyperplanes = std::move(hyperplanes);

  auto inside = [&](const AffineComponent& small, const AffineComponent& big) {
    return cone.leq(small.face, big.face) && cone.face(big.face).saturation.congruent(small.point, big.point);
  };
  std::sort(rest.begin(), rest.end(), [](const AffineComponent& a, const AffineComponent& b) {
    if (a.face != b.face) return a.face < b.face;
    return LexLess{}(a.point, b.point);
  });
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const auto& c = rest[i];
    bool redundant = false;
    for (const auto& [k, level] : out.hyperplanes) {
      const auto& above = cone.face(c.face).facets_above;
      if (std::binary_search(above.begin(), above.end(), k) && cone.value(k, c.point) == level) redundant = true;
    }
    for (std::size_t j = 0; j < rest.size() && !redundant; ++j) {
      if (j == i || !inside(c, rest[j])) continue;
      // Equal components keep the first copy.
      redundant = !inside(rest[j], c) || j < i;
    }
    if (!redundant) out.cosets.push_back(c);
  }
  return out;
}

bool GradedPiece::vanishes_at(const FaceLattice& cone, const IntVector& d) const {
  for (const auto& f : p_factors)
    if (cone.value(f.facet, d) == f.shift) return true;
  return std::any_of(components.begin(), components.end(), [&](const AffineComponent& c) { return c.contains(cone, d); });
}

ZCDecomposition GradedPiece::zero_set(const FaceLattice& cone) const {
  std::vector<std::pair<int, Integer>> h;
  for (const auto& f : p_factors) h.emplace_back(f.facet, f.shift);
  return normalize(cone, std::move(h), components);
}

std::vector<IntVector> omega_set_points(const LatticeSetView& s, const LatticeSetView& s_prime, const IntVector& a,
                                        const Box& box) {
  const Region pts = enumerate_box(s.cone(), box);
  const auto in_s = s.members(pts);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    if (!in_s[i]) continue;
    IntVector p = pts.points.point(i);
    if (!s_prime.contains(IntVector(p + a))) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Integer> missing_levels(const ValueSet& v, const Integer& shift) {
  std::vector<Integer> out;
  for (const auto& k : v.members_between(v.floor(), std::max(v.tail(), Integer(v.tail() - shift))))
    if (!v.contains(Integer(k + shift))) out.push_back(k);
  return out;
}

std::vector<LinearFactor> p_polynomial(const FaceLattice& cone, const std::vector<ValueSet>& values,
                                       const IntVector& a) {
  std::vector<LinearFactor> out;
  for (int k = 0; k < cone.facet_count(); ++k)
    for (auto& level : missing_levels(values[static_cast<std::size_t>(k)], cone.value(k, a)))
      out.push_back({k, std::move(level), 1});
  return out;
}

namespace {

std::vector<std::size_t> contributing(const CombinatorialSet& s, const CombinatorialSet& s_prime, const IntVector& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s_prime.excluded().size(); ++i) {
    const auto& e = s_prime.excluded()[i];
    if (s.contains_localized(IntVector(e.rep - a), e.face)) out.push_back(i);
  }
  return out;
}

}  // namespace

ZCDecomposition zc_decomposition(const CombinatorialSet& s, const CombinatorialSet& s_prime, const IntVector& a) {
  const auto& cone = s.cone();
  std::vector<std::pair<int, Integer>> h;
  for (auto& f : p_polynomial(cone, s.facet_values(), a)) h.emplace_back(f.facet, std::move(f.shift));
  std::vector<AffineComponent> cosets;
  for (auto i : contributing(s, s_prime, a)) {
    const auto& e = s_prime.excluded()[i];
    cosets.push_back(affine_component(cone, e.face, IntVector(e.rep - a)));
  }
  return normalize(cone, std::move(h), std::move(cosets));
}

ZCDecomposition zc_decomposition(const CombinatorialSet& s, const IntVector& a) { return zc_decomposition(s, s, a); }

GradedPiece graded_piece(const CombinatorialSet& s, const IntVector& a) {
  const auto& cone = s.cone();
  GradedPiece g;
  g.degree = a;
  g.p_factors = p_polynomial(cone, s.facet_values(), a);
  g.coset_indices = contributing(s, s, a);
  for (auto i : g.coset_indices) {
    const auto& e = s.excluded()[i];
    g.components.push_back(affine_component(cone, e.face, IntVector(e.rep - a)));
  }
  return g;
}

GradedPiece formal_adjoint(const FaceLattice& cone, const GradedPiece& piece) {
  GradedPiece out;
  out.degree = piece.degree;
  for (const auto& f : piece.p_factors)
    out.p_factors.push_back({f.facet, Integer(-f.shift - cone.value(f.facet, piece.degree)), -f.sign});
  for (const auto& c : piece.components)
    out.components.push_back(affine_component(cone, c.face, IntVector(-piece.degree - c.point)));
  out.coset_indices = piece.coset_indices;
  return out;
}

bool product_inclusion_check(const CombinatorialSet& s, const IntVector& a, const IntVector& b, const Box& box) {
  const auto& cone = s.cone();
  const auto za = zc_decomposition(s, a), zb = zc_decomposition(s, b);
  for (const auto& p : omega_set_points(s, s, IntVector(a + b), box))
    if (!za.contains(cone, p) && !zb.contains(cone, IntVector(p + a))) return false;
  return true;
}

}  // namespace dnoether
