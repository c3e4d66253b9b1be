#include "dnoether/preorder.hpp"

#include "dnoether/errors.hpp"
#include "dnoether/inference.hpp"

#include <algorithm>
#include <map>

namespace dnoether {

bool ESet::contains(const FaceLattice& cone, const IntVector& lambda) const {
  const IntVector r = cone.face(face).span.reduce(lambda);
  return std::binary_search(elements.begin(), elements.end(), r, LexLess{});
}

bool ESet::subset_of(const ESet& other) const {
  return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end(), LexLess{});
}

bool operator==(const ESet& a, const ESet& b) {
  if (a.face != b.face || a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (!equal(a.elements[i], b.elements[i])) return false;
  return true;
}

ESet e_set(const LatticeSetView& s, FaceId face, const IntVector& alpha) {
  ESet out{face, {}};
  for (const auto& lambda : s.cone().face(face).torsion)
    if (s.contains_localized(IntVector(alpha - lambda), face)) out.elements.push_back(lambda);
  std::sort(out.elements.begin(), out.elements.end(), LexLess{});
  return out;
}

PreorderVerdict preceq_tau(const LatticeSetView& s, FaceId face, const IntVector& alpha, const IntVector& beta) {
  const auto& cone = s.cone();
  for (FaceId t = cone.face_count() - 1; t >= 0; --t) {
    if (!cone.leq(face, t)) continue;
    if (!e_set(s, t, alpha).subset_of(e_set(s, t, beta))) return {false, t, std::nullopt};
  }
  return {};
}

PreorderVerdict preceq_s(const CombinatorialSet& s, FaceId face, const IntVector& alpha, const IntVector& a) {
  const auto& cone = s.cone();
  for (int k : cone.face(face).facets_above) {
    const auto& vals = s.facet_values()[static_cast<std::size_t>(k)];
    if (vals.contains(cone.value(k, alpha)) && !vals.contains(cone.value(k, IntVector(alpha + a))))
      return {false, cone.facet_face(k), std::nullopt};
  }
  for (std::size_t i = s.excluded().size(); i-- > 0;) {
    const auto& e = s.excluded()[i];
    if (!cone.leq(face, e.face)) continue;
    // α + a − b_i ∈ E(S)_{τ_i}(α): the class lies in Kτ_i and α minus it, b_i − a, is in S + ℤ(A∩τ_i).
    if (cone.in_span(IntVector(alpha + a - e.rep), e.face) && s.contains_localized(IntVector(e.rep - a), e.face))
      return {false, std::nullopt, i};
  }
  return {};
}

std::vector<ESet> signature(const LatticeSetView& s, FaceId face, const IntVector& alpha) {
  std::vector<ESet> out;
  for (FaceId t = 0; t < s.cone().face_count(); ++t)
    if (s.cone().leq(face, t)) out.push_back(e_set(s, t, alpha));
  return out;
}

namespace {

struct SignatureLess {
  bool operator()(const std::vector<ESet>& a, const std::vector<ESet>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].face != b[i].face) return a[i].face < b[i].face;
      const auto& x = a[i].elements;
      const auto& y = b[i].elements;
      if (std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), LexLess{})) return true;
      if (std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end(), LexLess{})) return false;
    }
    return false;
  }
};

}  // namespace

std::vector<EquivalenceClass> equivalence_classes(const LatticeSetView& s, FaceId face, const Box& box) {
  const Region pts = enumerate_box(s.cone(), box);
  std::map<std::vector<ESet>, std::size_t, SignatureLess> index;
  std::vector<EquivalenceClass> out;
  for (std::size_t i = 0; i < pts.points.size(); ++i) {
    const IntVector p = pts.points.point(i);
    auto sig = signature(s, face, p);
    auto it = index.find(sig);
    if (it == index.end()) {
      it = index.emplace(sig, out.size()).first;
      out.push_back({std::move(sig), {}});
    }
    out[it->second].points.push_back(p);
  }
  return out;
}

StableClasses stable_equivalence_classes(const CombinatorialSet& s, FaceId face, int max_rounds) {
  const auto& cone = s.cone();
  const std::int64_t m = to_int64(s.big_m());
  std::int64_t r = 2 * m * to_int64(generator_height(cone));
  const int d = static_cast<int>(cone.dim());
  auto keys = [](const std::vector<EquivalenceClass>& cls) {
    std::vector<std::vector<ESet>> k;
    for (const auto& c : cls) k.push_back(c.signature);
    std::sort(k.begin(), k.end(), SignatureLess{});
    return k;
  };
  Box box = Box::cube(d, -r, r);
  auto classes = equivalence_classes(s, face, box);
  for (int round = 0; round < max_rounds; ++round) {
    r += m;
    Box wider = Box::cube(d, -r, r);
    auto next = equivalence_classes(s, face, wider);
    const auto a = keys(classes), b = keys(next);
    const bool same = a.size() == b.size() &&
                      std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) {
                        return !SignatureLess{}(x, y) && !SignatureLess{}(y, x);
                      });
    box = std::move(wider);
    classes = std::move(next);
    if (same) return {box, classes};
  }
  throw InferenceBudgetExceeded("equivalence classes did not stabilize");
}

}  // namespace dnoether
