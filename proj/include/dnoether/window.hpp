#pragma once

#include "dnoether/cone.hpp"

#include <cstdint>
#include <vector>

namespace dnoether {

// Axis-aligned integer box, inclusive on both ends.
struct Box {
  std::vector<std::int64_t> lo, hi;

  static Box cube(int dim, std::int64_t lo, std::int64_t hi);
  int dim() const { return static_cast<int>(lo.size()); }
  bool empty() const;
  std::uint64_t size() const;
  bool contains(const IntVector& v) const;
  bool contains(const std::int64_t* p) const;
  std::uint64_t index(const std::int64_t* p) const;
};

// Points stored row-major in machine integers. Enumeration is bounded by a point budget,
// so machine integers suffice; conversion from Integer is checked.
struct PointSet {
  int dim = 0;
  std::vector<std::int64_t> coords;

  std::size_t size() const { return dim ? coords.size() / static_cast<std::size_t>(dim) : 0; }
  const std::int64_t* at(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(dim); }
  IntVector point(std::size_t i) const;
  void push(const std::int64_t* p) { coords.insert(coords.end(), p, p + dim); }
};

IntVector to_vector(const std::int64_t* p, int dim);

// Lattice points p with lo[k] <= F_k(p) <= hi[k] for every facet k, in lexicographic order,
// together with their facet values (row-major, facet_count per point).
struct Region {
  PointSet points;
  std::vector<std::int64_t> values;
  int facets = 0;
  const std::int64_t* values_at(std::size_t i) const {
    return values.data() + i * static_cast<std::size_t>(facets);
  }
};

constexpr std::size_t kDefaultPointBudget = 6'000'000;

Box region_bounding_box(const FaceLattice& cone, const std::vector<Integer>& lo,
                        const std::vector<Integer>& hi);
Region enumerate_region(const FaceLattice& cone, const std::vector<Integer>& lo,
                        const std::vector<Integer>& hi, std::size_t budget = kDefaultPointBudget);
// All points of a box, lexicographic.
Region enumerate_box(const FaceLattice& cone, const Box& box, std::size_t budget = kDefaultPointBudget);

// Membership bitmap over a box, used as the brute-force oracle in tests and self-checks.
class BoxOracle {
 public:
  template <typename Member>
  static BoxOracle build(const FaceLattice& cone, const Box& box, Member&& member) {
    BoxOracle o;
    o.box_ = box;
    const auto pts = enumerate_box(cone, box);
    o.bits_.resize(pts.points.size());
    for (std::size_t i = 0; i < pts.points.size(); ++i) o.bits_[i] = member(pts.points.point(i)) ? 1 : 0;
    return o;
  }

  static BoxOracle from_bits(Box box, std::vector<char> bits);

  const Box& box() const { return box_; }
  bool member(const IntVector& v) const;
  bool member(const std::int64_t* p) const { return bits_[box_.index(p)] != 0; }
  std::size_t count() const;
  const std::vector<char>& bits() const { return bits_; }
  friend bool operator==(const BoxOracle& a, const BoxOracle& b) {
    return a.box_.lo == b.box_.lo && a.box_.hi == b.box_.hi && a.bits_ == b.bits_;
  }

 private:
  Box box_;
  std::vector<char> bits_;
};

}  // namespace dnoether
