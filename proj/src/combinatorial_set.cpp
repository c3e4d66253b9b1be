#include "dnoether/combinatorial_set.hpp"

#include "dnoether/errors.hpp"

#include <algorithm>

namespace dnoether {

std::vector<char> LatticeSetView::members(const Region& region) const {
  std::vector<char> out(region.points.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = contains(region.points.point(i)) ? 1 : 0;
  return out;
}

bool LatticeSetView::in_scored(const IntVector& v) const {
  const auto& vs = facet_values();
  for (int k = 0; k < cone().facet_count(); ++k)
    if (!vs[static_cast<std::size_t>(k)].contains(cone().value(k, v))) return false;
  return true;
}

BoxOracle box_oracle(const LatticeSetView& view, const Box& box) {
  return BoxOracle::from_bits(box, view.members(enumerate_box(view.cone(), box)));
}

CombinatorialSet::CombinatorialSet(ConePtr cone, std::vector<ValueSet> values, std::vector<ExcludedCoset> excluded,
                                   SetKind kind)
    : cone_(std::move(cone)), values_(std::move(values)), excluded_(std::move(excluded)), kind_(kind) {
  if (static_cast<int>(values_.size()) != cone_->facet_count())
    throw std::invalid_argument("one value set per facet is required");
  for (auto& e : excluded_) {
    if (e.face < 0 || e.face >= cone_->face_count() || e.face == cone_->full_cone())
      throw std::invalid_argument("excluded coset on an invalid face");
    e.rep = cone_->face(e.face).span.reduce(e.rep);
    if (e.anchor.size() == 0) e.anchor = e.rep;
  }
  std::sort(excluded_.begin(), excluded_.end(), [](const ExcludedCoset& a, const ExcludedCoset& b) {
    if (a.face != b.face) return a.face < b.face;
    return LexLess{}(a.rep, b.rep);
  });
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end(),
                              [](const ExcludedCoset& a, const ExcludedCoset& b) {
                                return a.face == b.face && equal(a.rep, b.rep);
                              }),
                  excluded_.end());
}

bool CombinatorialSet::contains(const IntVector& v) const {
  if (!in_scored(v)) return false;
  for (const auto& e : excluded_)
    if (e.contains(*cone_, v)) return false;
  return true;
}

bool CombinatorialSet::contains_localized(const IntVector& v, FaceId face) const {
  for (int k : cone_->face(face).facets_above)
    if (!values_[static_cast<std::size_t>(k)].contains(cone_->value(k, v))) return false;
  for (const auto& e : excluded_)
    if (cone_->leq(face, e.face) && e.contains(*cone_, v)) return false;
  return true;
}

std::vector<char> CombinatorialSet::members(const Region& region) const {
  const int f = cone_->facet_count();
  // Facet levels of each excluded coset on the facets above its face, for a cheap prefilter.
  std::vector<std::vector<std::pair<int, std::int64_t>>> levels;
  for (const auto& e : excluded_) {
    std::vector<std::pair<int, std::int64_t>> l;
    for (int k : cone_->face(e.face).facets_above) l.emplace_back(k, to_int64(cone_->value(k, e.rep)));
    levels.push_back(std::move(l));
  }
  std::vector<char> out(region.points.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t* fv = region.values_at(i);
    bool in = true;
    for (int k = 0; k < f && in; ++k) in = values_[static_cast<std::size_t>(k)].contains(fv[k]);
    if (!in) continue;
    for (std::size_t c = 0; c < excluded_.size() && in; ++c) {
      bool level_match = true;
      for (const auto& [k, lvl] : levels[c])
        if (fv[k] != lvl) level_match = false;
      if (level_match && excluded_[c].contains(*cone_, region.points.point(i))) in = false;
    }
    out[i] = in ? 1 : 0;
  }
  return out;
}

CombinatorialSet CombinatorialSet::scored() const { return CombinatorialSet(cone_, values_, {}, kind_); }

CombinatorialSet CombinatorialSet::s2() const {
  std::vector<ExcludedCoset> kept;
  for (const auto& e : excluded_)
    if (cone_->is_facet(e.face)) kept.push_back(e);
  return CombinatorialSet(cone_, values_, kept, SetKind::General);
}

bool CombinatorialSet::is_s2() const {
  return std::all_of(excluded_.begin(), excluded_.end(), [&](const ExcludedCoset& e) { return cone_->codim(e.face) <= 1; });
}

Integer CombinatorialSet::big_m() const { return dnoether::big_m(*cone_, values_, excluded_); }

CombinatorialSet CombinatorialSet::translated(const IntVector& shift) const {
  std::vector<ValueSet> vs;
  for (int k = 0; k < cone_->facet_count(); ++k) vs.push_back(values_[static_cast<std::size_t>(k)].shifted(cone_->value(k, shift)));
  std::vector<ExcludedCoset> ex;
  for (const auto& e : excluded_) ex.push_back({e.face, IntVector(e.rep + shift), IntVector(e.anchor + shift)});
  return CombinatorialSet(cone_, std::move(vs), std::move(ex), SetKind::General);
}

std::vector<FaceId> CombinatorialSet::f_tilde() const {
  std::vector<FaceId> out;
  for (int k = 0; k < cone_->facet_count(); ++k) out.push_back(cone_->facet_face(k));
  for (const auto& e : excluded_) out.push_back(e.face);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool CombinatorialSet::same_expression(const CombinatorialSet& other) const {
  if (values_ != other.values_ || excluded_.size() != other.excluded_.size()) return false;
  for (std::size_t i = 0; i < excluded_.size(); ++i)
    if (excluded_[i].face != other.excluded_[i].face || !equal(excluded_[i].rep, other.excluded_[i].rep)) return false;
  return true;
}

Integer big_m(const FaceLattice& cone, const std::vector<ValueSet>& values, const std::vector<ExcludedCoset>& excluded) {
  Integer m = 1;
  for (int k = 0; k < cone.facet_count(); ++k) {
    const auto& v = values[static_cast<std::size_t>(k)];
    Integer hi = v.floor(), lo = v.floor();
    for (const auto& g : v.gaps()) hi = std::max(hi, g);
    for (const auto& e : excluded) {
      const Integer b = cone.value(k, e.anchor);
      hi = std::max(hi, b);
      lo = std::min(lo, b);
    }
    m = std::max(m, Integer(hi - lo + 1));
  }
  return m;
}

bool three_way_witness(const IntVector& d, const CombinatorialSet& s, std::size_t i) {
  const auto& e = s.excluded().at(i);
  return s.contains_localized(IntVector(e.rep - d), e.face);
}

}  // namespace dnoether
