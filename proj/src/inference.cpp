#include "dnoether/inference.hpp"

#include "dnoether/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace dnoether {

Integer generator_height(const FaceLattice& cone) {
  Integer g = 1;
  for (int k = 0; k < cone.facet_count(); ++k)
    for (const auto& a : cone.generators()) g = std::max(g, cone.value(k, a));
  return g;
}

namespace {

struct Collected {
  std::vector<ExcludedCoset> cosets;
  Region region;
  std::vector<char> members;
  std::size_t holes = 0;
};

using CosetKey = std::pair<FaceId, IntVector>;

struct KeyLess {
  bool operator()(const CosetKey& a, const CosetKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return LexLess{}(a.second, b.second);
  }
};

bool lower(const IntVector& a, const Integer& ha, const IntVector& b, const Integer& hb) {
  if (ha != hb) return ha < hb;
  return LexLess{}(a, b);
}

Collected collect(const LatticeSetView& view, const FaceLattice& cone, const std::vector<Integer>& floors,
                  std::int64_t window, std::size_t budget) {
  const int f = cone.facet_count();
  std::vector<Integer> hi;
  for (const auto& x : floors) hi.push_back(x + window);
  Collected out;
  out.region = enumerate_region(cone, floors, hi, budget);
  out.members = view.members(out.region);
  const auto& values = view.facet_values();

  struct Best {
    IntVector anchor;
    Integer height;
  };
  std::map<CosetKey, Best, KeyLess> found;
  std::map<CosetKey, bool, KeyLess> localized;  // (face, class) -> class meets T + ℤ(A∩τ)

  for (std::size_t i = 0; i < out.region.points.size(); ++i) {
    if (out.members[i]) continue;
    const std::int64_t* fv = out.region.values_at(i);
    bool scored = true;
    for (int k = 0; k < f && scored; ++k) scored = values[static_cast<std::size_t>(k)].contains(fv[k]);
    if (!scored) continue;
    ++out.holes;
    const IntVector p = out.region.points.point(i);
    Integer height = 0;
    for (int k = 0; k < f; ++k) height += fv[k];

    std::vector<FaceId> selected;
    for (FaceId t = 1; t < cone.face_count(); ++t) {
      if (std::any_of(selected.begin(), selected.end(), [&](FaceId s) { return cone.leq(t, s); })) continue;
      CosetKey key{t, cone.face(t).span.reduce(p)};
      auto it = localized.find(key);
      if (it == localized.end()) it = localized.emplace(key, view.contains_localized(p, t)).first;
      if (!it->second) selected.push_back(t);
    }
    check(!selected.empty(), "hole " + to_string(p) + " lies in every localization");
    for (FaceId t : selected) {
      CosetKey key{t, cone.face(t).span.reduce(p)};
      auto it = found.find(key);
      if (it == found.end())
        found.emplace(key, Best{p, height});
      else if (lower(p, height, it->second.anchor, it->second.height))
        it->second = Best{p, height};
    }
  }

  for (const auto& [key, best] : found) {
    for (const auto& [other, unused] : found) {
      if (other.first == key.first || !cone.leq(key.first, other.first)) continue;
      check(!cone.face(other.first).span.congruent(key.second, other.second),
            "hole coset on " + cone.face_name(key.first) + " is not maximal");
    }
    out.cosets.push_back(ExcludedCoset{key.first, key.second, best.anchor});
  }
  return out;
}

bool same_cosets(const std::vector<ExcludedCoset>& a, const std::vector<ExcludedCoset>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].face != b[i].face || !equal(a[i].rep, b[i].rep)) return false;
  return true;
}

}  // namespace

CombinatorialSet infer_standard_form(const LatticeSetView& view, const ConePtr& cone, SetKind kind,
                                     const InferenceOptions& options, InferenceReport* report) {
  const auto& values = view.facet_values();
  std::vector<Integer> floors;
  Integer spread = 0;
  for (const auto& v : values) {
    floors.push_back(v.floor());
    spread = std::max(spread, Integer(v.tail() - v.floor()));
  }
  const Integer g = generator_height(*cone);
  const Integer m0 = big_m(*cone, values, {});
  std::int64_t window = std::max(options.min_window, to_int64(2 * (m0 + g) + spread));

  std::optional<std::vector<ExcludedCoset>> previous;
  for (int round = 1; round <= options.max_rounds; ++round) {
    Collected c = collect(view, *cone, floors, window, options.point_budget);
    const std::int64_t need = to_int64(2 * (big_m(*cone, values, c.cosets) + g) + spread);
    if (previous && same_cosets(*previous, c.cosets) && window >= need) {
      CombinatorialSet result(cone, values, std::move(c.cosets), kind);
      const auto symbolic = result.members(c.region);
      for (std::size_t i = 0; i < symbolic.size(); ++i)
        check(symbolic[i] == c.members[i],
              "inferred expression disagrees with membership at " + to_string(c.region.points.point(i)));
      if (report) *report = InferenceReport{window, round, c.region.points.size(), c.holes};
      return result;
    }
    previous = std::move(c.cosets);
    window = std::max(window + window / 2, need);
  }
  throw InferenceBudgetExceeded("standard expression did not stabilize within " +
                                std::to_string(options.max_rounds) + " windows");
}

}  // namespace dnoether
