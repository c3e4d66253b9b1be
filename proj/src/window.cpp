#include "dnoether/window.hpp"

#include "dnoether/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dnoether {

Box Box::cube(int dim, std::int64_t lo, std::int64_t hi) {
  return Box{std::vector<std::int64_t>(static_cast<std::size_t>(dim), lo),
             std::vector<std::int64_t>(static_cast<std::size_t>(dim), hi)};
}

bool Box::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

std::uint64_t Box::size() const {
  if (empty()) return 0;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const auto w = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    if (n > std::numeric_limits<std::uint64_t>::max() / w) return std::numeric_limits<std::uint64_t>::max();
    n *= w;
  }
  return n;
}

bool Box::contains(const IntVector& v) const {
  if (v.size() != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (v[i] < lo[static_cast<std::size_t>(i)] || v[i] > hi[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Box::contains(const std::int64_t* p) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

std::uint64_t Box::index(const std::int64_t* p) const {
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < lo.size(); ++i)
    idx = idx * static_cast<std::uint64_t>(hi[i] - lo[i] + 1) + static_cast<std::uint64_t>(p[i] - lo[i]);
  return idx;
}

IntVector to_vector(const std::int64_t* p, int dim) {
  IntVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Integer(p[i]);
  return v;
}

IntVector PointSet::point(std::size_t i) const { return to_vector(at(i), dim); }

namespace {

Integer floor_q(const Integer& n, const Integer& d) { return floor_div(n, d); }
Integer ceil_q(const Integer& n, const Integer& d) { return -floor_div(Integer(-n), d); }

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return -floor_div64(-a, b); }

void check_budget(std::uint64_t n, std::size_t budget) {
  if (n > budget)
    throw InferenceBudgetExceeded("enumeration of " + std::to_string(n) + " points exceeds the budget of " +
                                  std::to_string(budget));
}

}  // namespace

Box region_bounding_box(const FaceLattice& cone, const std::vector<Integer>& lo, const std::vector<Integer>& hi) {
  const int d = static_cast<int>(cone.dim());
  const int f = cone.facet_count();
  std::vector<Integer> bmin(static_cast<std::size_t>(d)), bmax(static_cast<std::size_t>(d));
  bool any = false;
  std::vector<int> pick(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (f < d) return Box{std::vector<std::int64_t>(static_cast<std::size_t>(d), 0),
                        std::vector<std::int64_t>(static_cast<std::size_t>(d), -1)};
  for (;;) {
    IntMatrix n(d, d);
    for (int r = 0; r < d; ++r) n.row(r) = cone.facet(pick[static_cast<std::size_t>(r)]).normal.transpose();
    Integer det = determinant(n);
    if (det != 0) {
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        IntVector y(d);
        for (int r = 0; r < d; ++r) {
          const auto k = static_cast<std::size_t>(pick[static_cast<std::size_t>(r)]);
          y[r] = (mask >> r) & 1u ? hi[k] : lo[k];
        }
        IntVector num(d);
        for (int i = 0; i < d; ++i) {
          IntMatrix ni = n;
          ni.col(i) = y;
          num[i] = determinant(ni);
        }
        Integer den = det;
        if (den < 0) {
          den = -den;
          num = -num;
        }
        bool feasible = true;
        for (int k = 0; k < f && feasible; ++k) {
          const Integer v = dot(cone.facet(k).normal, num);
          if (v < lo[static_cast<std::size_t>(k)] * den || v > hi[static_cast<std::size_t>(k)] * den) feasible = false;
        }
        if (!feasible) continue;
        for (int i = 0; i < d; ++i) {
          const Integer a = floor_q(num[i], den), b = ceil_q(num[i], den);
          const auto si = static_cast<std::size_t>(i);
          if (!any || a < bmin[si]) bmin[si] = a;
          if (!any || b > bmax[si]) bmax[si] = b;
        }
        any = true;
      }
    }
    int i = d;
    while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == f - d + i - 1) --i;
    if (i == 0) break;
    ++pick[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  Box box;
  for (int i = 0; i < d; ++i) {
    const auto si = static_cast<std::size_t>(i);
    box.lo.push_back(any ? to_int64(bmin[si]) : 0);
    box.hi.push_back(any ? to_int64(bmax[si]) : -1);
  }
  return box;
}

Region enumerate_region(const FaceLattice& cone, const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                        std::size_t budget) {
  const int d = static_cast<int>(cone.dim());
  const int f = cone.facet_count();
  const Box box = region_bounding_box(cone, lo, hi);
  Region out;
  out.points.dim = d;
  out.facets = f;
  if (box.empty()) return out;
  // The last coordinate is solved exactly, so only the prefix box counts against the budget.
  std::uint64_t prefix = 1;
  for (int i = 0; i + 1 < d; ++i) prefix *= static_cast<std::uint64_t>(box.hi[static_cast<std::size_t>(i)] - box.lo[static_cast<std::size_t>(i)] + 1);
  check_budget(prefix, budget);

  std::vector<std::int64_t> normals, flo, fhi;
  for (int k = 0; k < f; ++k) {
    for (int i = 0; i < d; ++i) normals.push_back(to_int64(cone.facet(k).normal[i]));
    flo.push_back(to_int64(lo[static_cast<std::size_t>(k)]));
    fhi.push_back(to_int64(hi[static_cast<std::size_t>(k)]));
  }
  std::vector<std::int64_t> p(box.lo.begin(), box.lo.end());
  std::vector<std::int64_t> partial(static_cast<std::size_t>(f));
  const int last = d - 1;
  for (;;) {
    std::int64_t ylo = box.lo[static_cast<std::size_t>(last)], yhi = box.hi[static_cast<std::size_t>(last)];
    bool ok = true;
    for (int k = 0; k < f && ok; ++k) {
      const std::int64_t* nk = normals.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(d);
      std::int64_t s = 0;
      for (int i = 0; i < last; ++i) s += nk[i] * p[static_cast<std::size_t>(i)];
      partial[static_cast<std::size_t>(k)] = s;
      const std::int64_t c = nk[last];
      const std::int64_t a = flo[static_cast<std::size_t>(k)] - s, b = fhi[static_cast<std::size_t>(k)] - s;
      if (c == 0) {
        ok = a <= 0 && 0 <= b;
      } else if (c > 0) {
        ylo = std::max(ylo, ceil_div64(a, c));
        yhi = std::min(yhi, floor_div64(b, c));
      } else {
        ylo = std::max(ylo, ceil_div64(b, c));
        yhi = std::min(yhi, floor_div64(a, c));
      }
    }
    if (ok) {
      for (std::int64_t y = ylo; y <= yhi; ++y) {
        p[static_cast<std::size_t>(last)] = y;
        out.points.push(p.data());
        for (int k = 0; k < f; ++k)
          out.values.push_back(partial[static_cast<std::size_t>(k)] +
                               normals[static_cast<std::size_t>(k) * static_cast<std::size_t>(d) + static_cast<std::size_t>(last)] * y);
      }
      check_budget(out.points.size(), budget);
    }
    int i = last - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == box.hi[static_cast<std::size_t>(i)]) {
      p[static_cast<std::size_t>(i)] = box.lo[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++p[static_cast<std::size_t>(i)];
  }
  return out;
}

Region enumerate_box(const FaceLattice& cone, const Box& box, std::size_t budget) {
  const int d = box.dim();
  const int f = cone.facet_count();
  Region out;
  out.points.dim = d;
  out.facets = f;
  if (box.empty()) return out;
  check_budget(box.size(), budget);
  std::vector<std::int64_t> normals;
  for (int k = 0; k < f; ++k)
    for (int i = 0; i < d; ++i) normals.push_back(to_int64(cone.facet(k).normal[i]));
  std::vector<std::int64_t> p(box.lo.begin(), box.lo.end());
  out.points.coords.reserve(box.size() * static_cast<std::size_t>(d));
  for (;;) {
    out.points.push(p.data());
    for (int k = 0; k < f; ++k) {
      std::int64_t s = 0;
      for (int i = 0; i < d; ++i) s += normals[static_cast<std::size_t>(k * d + i)] * p[static_cast<std::size_t>(i)];
      out.values.push_back(s);
    }
    int i = d - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == box.hi[static_cast<std::size_t>(i)]) {
      p[static_cast<std::size_t>(i)] = box.lo[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++p[static_cast<std::size_t>(i)];
  }
  return out;
}

BoxOracle BoxOracle::from_bits(Box box, std::vector<char> bits) {
  if (bits.size() != box.size()) throw std::invalid_argument("oracle bitmap does not match its box");
  BoxOracle o;
  o.box_ = std::move(box);
  o.bits_ = std::move(bits);
  return o;
}

bool BoxOracle::member(const IntVector& v) const {
  if (!box_.contains(v)) throw std::out_of_range("point outside the oracle box: " + to_string(v));
  std::vector<std::int64_t> p;
  for (Eigen::Index i = 0; i < v.size(); ++i) p.push_back(v[i].convert_to<std::int64_t>());
  return bits_[box_.index(p.data())] != 0;
}

std::size_t BoxOracle::count() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1)); }

}  // namespace dnoether
