#include "dnoether/duality.hpp"

#include "dnoether/errors.hpp"

#include <algorithm>

namespace dnoether {

const IntVector& BTuple::at(FaceId face) const {
  const auto it = std::lower_bound(faces.begin(), faces.end(), face);
  if (it == faces.end() || *it != face) throw std::out_of_range("face is not indexed by the tuple");
  return reps[static_cast<std::size_t>(it - faces.begin())];
}

bool BTuple::is_zero() const {
  return std::all_of(reps.begin(), reps.end(), [](const IntVector& v) { return v.isZero(); });
}

std::vector<BTuple> compute_b(const CombinatorialSet& s) {
  const auto& cone = s.cone();
  const auto faces = s.f_tilde();
  std::vector<const std::vector<IntVector>*> choices;
  for (FaceId t : faces) choices.push_back(&cone.face(t).torsion);

  auto compatible = [&](const BTuple& b) {
    for (const auto& e : s.excluded()) {
      const IntVector shifted = e.rep + b.at(e.face);
      for (FaceId t : faces) {
        if (t == e.face || !cone.leq(e.face, t)) continue;
        const auto& lat = cone.face(t).span;
        bool found = false;
        for (const auto& other : s.excluded())
          if (other.face == t && lat.congruent(shifted, IntVector(other.rep + b.at(t)))) found = true;
        if (!found) return false;
      }
    }
    return true;
  };

  std::vector<BTuple> out;
  std::vector<std::size_t> pick(faces.size(), 0);
  for (;;) {
    BTuple b{faces, {}};
    for (std::size_t k = 0; k < faces.size(); ++k) b.reps.push_back((*choices[k])[pick[k]]);
    if (compatible(b)) out.push_back(std::move(b));
    std::size_t k = faces.size();
    while (k > 0 && ++pick[k - 1] == choices[k - 1]->size()) pick[--k] = 0;
    if (k == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const BTuple& x, const BTuple& y) {
    return std::lexicographical_compare(x.reps.begin(), x.reps.end(), y.reps.begin(), y.reps.end(), LexLess{});
  });
  return out;
}

DualView::DualView(const CombinatorialSet& base, BTuple b) : base_(base), b_(std::move(b)) {
  const auto& cone = base.cone();
  for (int k = 0; k < cone.facet_count(); ++k) {
    // F_σ(b_σ) = 0, so the facet levels are −(F_σ(base)^c ∪ {F_σ(b_i) : τ_i = σ}).
    std::vector<Integer> extra;
    for (const auto& e : base.excluded())
      if (e.face == cone.facet_face(k)) extra.push_back(cone.value(k, e.rep));
    values_.push_back(ValueSet::reflected_complement(base.facet_values()[static_cast<std::size_t>(k)], extra, 0));
  }
}

bool DualView::contains(const IntVector& a) const {
  for (std::size_t k = 0; k < b_.faces.size(); ++k)
    if (base_.contains_localized(IntVector(-a - b_.reps[k]), b_.faces[k])) return false;
  return true;
}

bool DualView::contains_localized(const IntVector& a, FaceId face) const {
  const auto& cone = base_.cone();
  for (std::size_t k = 0; k < b_.faces.size(); ++k)
    if (cone.leq(face, b_.faces[k]) && base_.contains_localized(IntVector(-a - b_.reps[k]), b_.faces[k]))
      return false;
  return true;
}

OmegaSet omega(const CombinatorialSet& s, const BTuple& b, const InferenceOptions& options) {
  DualView view(s, b);
  return {infer_standard_form(view, s.cone_ptr(), SetKind::General, options), b};
}

OmegaSet omega(const CombinatorialSet& s, const InferenceOptions& options) {
  const auto all = compute_b(s);
  if (all.empty()) throw EmptyB("no compatible tuple (b_tau) exists, so omega(S) is undefined");
  return omega(s, all.front(), options);
}

CombinatorialSet reflect(const CombinatorialSet& s, const BTuple& b, const InferenceOptions& options) {
  const auto w = omega(s, b, options);
  DualView view(w.base, b);
  return infer_standard_form(view, s.cone_ptr(), SetKind::General, options);
}

std::optional<IntVector> solve_facet_levels(const FaceLattice& cone, const std::vector<Integer>& levels) {
  const auto d = cone.dim();
  // Pick d independent normals greedily and apply Cramer's rule.
  std::vector<int> rows;
  IntMatrix n(0, d);
  for (int k = 0; k < cone.facet_count() && static_cast<Eigen::Index>(rows.size()) < d; ++k) {
    std::vector<IntVector> cols;
    for (int r : rows) cols.push_back(cone.facet(r).normal);
    cols.push_back(cone.facet(k).normal);
    if (IntLattice::span(d, cols).rank() == static_cast<Eigen::Index>(cols.size())) rows.push_back(k);
  }
  check(static_cast<Eigen::Index>(rows.size()) == d, "facet normals do not span");
  IntMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m.row(i) = cone.facet(rows[static_cast<std::size_t>(i)]).normal.transpose();
  const Integer det = determinant(m);
  IntVector a(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    IntMatrix mj = m;
    for (Eigen::Index i = 0; i < d; ++i) mj(i, j) = levels[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])];
    const Integer num = determinant(mj);
    if (num % det != 0) return std::nullopt;
    a[j] = num / det;
  }
  for (int k = 0; k < cone.facet_count(); ++k)
    if (cone.value(k, a) != levels[static_cast<std::size_t>(k)]) return std::nullopt;
  return a;
}

std::optional<IntVector> self_duality_shift(const CombinatorialSet& s, const OmegaSet& w) {
  const auto& cone = s.cone();
  std::vector<Integer> levels;
  for (int k = 0; k < cone.facet_count(); ++k)
    levels.push_back(w.base.facet_values()[static_cast<std::size_t>(k)].floor() -
                     s.facet_values()[static_cast<std::size_t>(k)].floor());
  auto a = solve_facet_levels(cone, levels);
  if (!a || !s.translated(*a).same_expression(w.base)) return std::nullopt;
  return a;
}

std::optional<IntVector> self_duality_shift(const CombinatorialSet& s, const BTuple& b) {
  return self_duality_shift(s, omega(s, b));
}

}  // namespace dnoether
