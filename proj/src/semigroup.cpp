#include "dnoether/semigroup.hpp"

#include "dnoether/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dnoether {

namespace {

struct DpTable {
  std::vector<std::int64_t> heights;
  Box box;
  std::vector<char> bits;

  bool covers(const std::vector<std::int64_t>& need) const {
    for (std::size_t k = 0; k < need.size(); ++k)
      if (need[k] > heights[k]) return false;
    return true;
  }
  bool member(const std::int64_t* p, const std::int64_t* values, std::size_t facets) const {
    for (std::size_t k = 0; k < facets; ++k)
      if (values[k] < 0 || values[k] > heights[k]) return false;
    return bits[box.index(p)] != 0;
  }
};

// Membership in the monoid generated by the chosen generators, for every point of
// {0 ≤ F_σ ≤ heights_σ}. Points are visited by increasing Σ_σ F_σ, which strictly decreases
// along every generator step since the cone is pointed.
DpTable build_dp(const FaceLattice& cone, const std::vector<int>& gen_ids, std::vector<std::int64_t> heights,
                 std::size_t budget = kDefaultPointBudget) {
  const int d = static_cast<int>(cone.dim());
  const int f = cone.facet_count();
  std::vector<Integer> lo(static_cast<std::size_t>(f), Integer(0)), hi;
  for (auto h : heights) hi.emplace_back(h);
  DpTable t;
  t.heights = std::move(heights);
  t.box = region_bounding_box(cone, lo, hi);
  const Region region = enumerate_region(cone, lo, hi, budget);
  if (t.box.size() > 8 * static_cast<std::uint64_t>(budget))
    throw InferenceBudgetExceeded("membership table box too large");
  t.bits.assign(static_cast<std::size_t>(t.box.size()), 0);

  std::vector<std::int64_t> stride(static_cast<std::size_t>(d), 1);
  for (int i = d - 2; i >= 0; --i)
    stride[static_cast<std::size_t>(i)] =
        stride[static_cast<std::size_t>(i + 1)] *
        (t.box.hi[static_cast<std::size_t>(i + 1)] - t.box.lo[static_cast<std::size_t>(i + 1)] + 1);
  struct Step {
    std::int64_t offset;
    std::vector<std::int64_t> values;
  };
  std::vector<Step> steps;
  for (int g : gen_ids) {
    const auto& v = cone.generators()[static_cast<std::size_t>(g)];
    Step s{0, {}};
    for (int i = 0; i < d; ++i) s.offset += to_int64(v[i]) * stride[static_cast<std::size_t>(i)];
    for (int k = 0; k < f; ++k) s.values.push_back(to_int64(cone.value(k, v)));
    steps.push_back(std::move(s));
  }

  const std::size_t n = region.points.size();
  std::vector<std::int64_t> level(n);
  std::int64_t top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t* fv = region.values_at(i);
    level[i] = std::accumulate(fv, fv + f, std::int64_t{0});
    top = std::max(top, level[i]);
  }
  std::vector<std::size_t> start(static_cast<std::size_t>(top) + 2, 0), order(n);
  for (std::size_t i = 0; i < n; ++i) ++start[static_cast<std::size_t>(level[i]) + 1];
  for (std::size_t h = 1; h < start.size(); ++h) start[h] += start[h - 1];
  for (std::size_t i = 0; i < n; ++i) order[start[static_cast<std::size_t>(level[i])]++] = i;

  for (std::size_t i : order) {
    const std::int64_t* p = region.points.at(i);
    const std::int64_t* fv = region.values_at(i);
    const auto idx = static_cast<std::int64_t>(t.box.index(p));
    if (level[i] == 0) {
      t.bits[static_cast<std::size_t>(idx)] = 1;  // the only point with all facet values 0 is the origin
      continue;
    }
    for (const auto& s : steps) {
      bool fits = true;
      for (int k = 0; k < f; ++k)
        if (fv[k] < s.values[static_cast<std::size_t>(k)]) {
          fits = false;
          break;
        }
      if (fits && t.bits[static_cast<std::size_t>(idx - s.offset)]) {
        t.bits[static_cast<std::size_t>(idx)] = 1;
        break;
      }
    }
  }
  return t;
}

std::vector<std::int64_t> facet_levels(const FaceLattice& cone, const IntVector& v) {
  std::vector<std::int64_t> out;
  for (int k = 0; k < cone.facet_count(); ++k) out.push_back(to_int64(cone.value(k, v)));
  return out;
}

std::vector<std::int64_t> coords64(const IntVector& v) {
  std::vector<std::int64_t> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_int64(v[i]));
  return out;
}

bool dp_member(const IntVector& v, const FaceLattice& cone, const std::vector<int>& gens) {
  const auto levels = facet_levels(cone, v);
  for (auto x : levels)
    if (x < 0) return false;
  const auto t = build_dp(cone, gens, levels);
  const auto p = coords64(v);
  return t.member(p.data(), levels.data(), levels.size());
}

}  // namespace

bool na_member(const IntVector& v, const FaceLattice& cone) {
  std::vector<int> all(cone.generators().size());
  std::iota(all.begin(), all.end(), 0);
  return dp_member(v, cone, all);
}

bool face_semigroup_member(const IntVector& v, const FaceLattice& cone, FaceId face) {
  for (int k : cone.face(face).facets_above)
    if (cone.value(k, v) != 0) return false;
  return dp_member(v, cone, cone.face(face).generators);
}

ValueSet facet_value_set(const FaceLattice& cone, int facet) {
  std::vector<Integer> vals;
  for (const auto& g : cone.generators()) vals.push_back(cone.value(facet, g));
  return ValueSet::generated_by(vals);
}

std::vector<ValueSet> semigroup_values(const FaceLattice& cone) {
  std::vector<ValueSet> out;
  for (int k = 0; k < cone.facet_count(); ++k) out.push_back(facet_value_set(cone, k));
  return out;
}

struct SemigroupView::Table : DpTable {};

struct SemigroupView::Classes {
  std::vector<std::int64_t> heights;  // per facet above the face
  std::unordered_set<IntVector, VectorHash, VectorEqual> reached;
};

SemigroupView::SemigroupView(ConePtr cone) : cone_(std::move(cone)), values_(semigroup_values(*cone_)) {
  classes_.resize(static_cast<std::size_t>(cone_->face_count()));
}

SemigroupView::~SemigroupView() = default;

void SemigroupView::ensure_table(const std::vector<std::int64_t>& need) const {
  if (table_ && table_->covers(need)) return;
  std::vector<std::int64_t> h(need.size());
  for (std::size_t k = 0; k < need.size(); ++k) {
    h[k] = std::max<std::int64_t>(need[k], 8);
    if (table_) h[k] = std::max(h[k], 2 * table_->heights[k]);
  }
  std::vector<int> all(cone_->generators().size());
  std::iota(all.begin(), all.end(), 0);
  auto t = std::make_unique<Table>();
  static_cast<DpTable&>(*t) = build_dp(*cone_, all, std::move(h));
  table_ = std::move(t);
}

bool SemigroupView::lookup(const std::int64_t* p, const std::int64_t* values) const {
  return table_->member(p, values, static_cast<std::size_t>(cone_->facet_count()));
}

bool SemigroupView::contains(const IntVector& v) const {
  const auto levels = facet_levels(*cone_, v);
  for (auto x : levels)
    if (x < 0) return false;
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_table(levels);
  const auto p = coords64(v);
  return lookup(p.data(), levels.data());
}

std::vector<char> SemigroupView::members(const Region& region) const {
  const int f = cone_->facet_count();
  std::vector<std::int64_t> need(static_cast<std::size_t>(f), 0);
  for (std::size_t i = 0; i < region.points.size(); ++i)
    for (int k = 0; k < f; ++k) need[static_cast<std::size_t>(k)] = std::max(need[static_cast<std::size_t>(k)], region.values_at(i)[k]);
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_table(need);
  std::vector<char> out(region.points.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lookup(region.points.at(i), region.values_at(i)) ? 1 : 0;
  return out;
}

bool SemigroupView::contains_localized(const IntVector& v, FaceId face) const {
  if (face == cone_->full_cone()) return true;
  if (face == cone_->zero_face()) return contains(v);
  const Face& fc = cone_->face(face);
  std::vector<std::int64_t> need;
  for (int k : fc.facets_above) {
    const auto x = to_int64(cone_->value(k, v));
    if (x < 0) return false;
    need.push_back(x);
  }
  const IntVector key = fc.span.reduce(v);
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = classes_[static_cast<std::size_t>(face)];
  bool covered = slot != nullptr;
  for (std::size_t k = 0; covered && k < need.size(); ++k) covered = need[k] <= slot->heights[k];
  if (!covered) {
    auto c = std::make_unique<Classes>();
    for (std::size_t k = 0; k < need.size(); ++k) {
      std::int64_t h = std::max<std::int64_t>(need[k], 8);
      if (slot) h = std::max(h, 2 * slot->heights[k]);
      c->heights.push_back(h);
    }
    std::vector<int> moving;
    for (int g = 0; g < static_cast<int>(cone_->generators().size()); ++g)
      if (!std::binary_search(fc.generators.begin(), fc.generators.end(), g)) moving.push_back(g);
    std::vector<IntVector> stack{IntVector::Zero(cone_->dim())};
    c->reached.insert(stack.back());
    while (!stack.empty()) {
      const IntVector cur = std::move(stack.back());
      stack.pop_back();
      for (int g : moving) {
        IntVector next = fc.span.reduce(IntVector(cur + cone_->generators()[static_cast<std::size_t>(g)]));
        bool fits = true;
        for (std::size_t k = 0; k < fc.facets_above.size() && fits; ++k)
          fits = cone_->value(fc.facets_above[k], next) <= c->heights[k];
        if (fits && c->reached.insert(next).second) stack.push_back(std::move(next));
      }
    }
    slot = std::move(c);
  }
  return slot->reached.count(key) > 0;
}

CombinatorialSet standard_expression(const ConePtr& cone, const InferenceOptions& options, InferenceReport* report) {
  SemigroupView view(cone);
  return infer_standard_form(view, cone, SetKind::Semigroup, options, report);
}

DeepInteriorResult deep_interior(const FaceLattice& cone, FaceId face, const Integer& m, const IntVector& v) {
  if (!face_semigroup_member(v, cone, face)) return {false, DeepInteriorResult::Reason::NotInFaceSemigroup};
  const auto& above = cone.face(face).facets_above;
  for (int k = 0; k < cone.facet_count(); ++k)
    if (!std::binary_search(above.begin(), above.end(), k) && cone.value(k, v) < m)
      return {false, DeepInteriorResult::Reason::BelowThreshold};
  return {true, DeepInteriorResult::Reason::Member};
}

}  // namespace dnoether
