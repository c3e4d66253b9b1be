#pragma once

#include "dnoether/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dnoether {

// A set of integers that is bounded below and contains a final ray [tail, ∞):
// sporadic ∪ [tail, ∞) with every sporadic value below tail - 1.
class ValueSet {
 public:
  ValueSet() : ValueSet({}, Integer(0)) {}
  ValueSet(std::vector<Integer> sporadic, Integer tail);

  // Numerical-semigroup-like set generated by nonnegative values whose positive part has gcd 1.
  static ValueSet generated_by(const std::vector<Integer>& generators);
  // {−shift − x : x ∈ (Z ∖ base) ∪ extra}.
  static ValueSet reflected_complement(const ValueSet& base, const std::vector<Integer>& extra,
                                       const Integer& shift);

  bool contains(const Integer& k) const;
  bool contains(std::int64_t k) const;
  const Integer& floor() const { return floor_; }
  const Integer& tail() const { return tail_; }
  const std::vector<Integer>& sporadic() const { return sporadic_; }
  // Integers in [floor, tail) that are not in the set.
  std::vector<Integer> gaps() const;
  ValueSet shifted(const Integer& c) const;
  // Members in [lo, hi].
  std::vector<Integer> members_between(const Integer& lo, const Integer& hi) const;

  std::string to_string() const;
  friend bool operator==(const ValueSet& a, const ValueSet& b) {
    return a.tail_ == b.tail_ && a.sporadic_ == b.sporadic_;
  }

 private:
  std::vector<Integer> sporadic_;
  Integer tail_;
  Integer floor_;
  std::vector<std::int64_t> fast_sporadic_;
  std::int64_t fast_tail_ = 0;
  bool fast_ = false;
};

}  // namespace dnoether
