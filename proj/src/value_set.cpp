#include "dnoether/value_set.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dnoether {

ValueSet::ValueSet(std::vector<Integer> sporadic, Integer tail) : tail_(std::move(tail)) {
  std::sort(sporadic.begin(), sporadic.end());
  sporadic.erase(std::unique(sporadic.begin(), sporadic.end()), sporadic.end());
  while (!sporadic.empty() && sporadic.back() >= tail_) sporadic.pop_back();
  while (!sporadic.empty() && sporadic.back() == tail_ - 1) {
    tail_ -= 1;
    sporadic.pop_back();
  }
  sporadic_ = std::move(sporadic);
  floor_ = sporadic_.empty() ? tail_ : sporadic_.front();

  static const Integer lo(std::numeric_limits<std::int64_t>::min() / 4);
  static const Integer hi(std::numeric_limits<std::int64_t>::max() / 4);
  fast_ = floor_ > lo && tail_ < hi;
  if (fast_) {
    fast_tail_ = tail_.convert_to<std::int64_t>();
    for (const auto& s : sporadic_) fast_sporadic_.push_back(s.convert_to<std::int64_t>());
  }
}

ValueSet ValueSet::generated_by(const std::vector<Integer>& generators) {
  std::vector<std::int64_t> gens;
  std::int64_t g = 0;
  for (const auto& x : generators) {
    if (x < 0) throw std::invalid_argument("value set generators must be nonnegative");
    if (x == 0) continue;
    const auto v = to_int64(x);
    if (v > 1000000) throw std::overflow_error("facet value too large for the value-set table");
    gens.push_back(v);
    g = std::gcd(g, v);
  }
  if (gens.empty() || g != 1) throw std::invalid_argument("facet values do not generate a cofinite set");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Once `min` consecutive members appear, every larger value is reachable.
  const std::int64_t run = gens.front();
  std::vector<char> in{1};
  std::int64_t streak = 1, k = 0;
  while (streak < run) {
    ++k;
    char member = 0;
    for (auto x : gens)
      if (x <= k && in[static_cast<std::size_t>(k - x)]) {
        member = 1;
        break;
      }
    in.push_back(member);
    streak = member ? streak + 1 : 0;
  }
  const std::int64_t tail = k - run + 1;
  std::vector<Integer> sporadic;
  for (std::int64_t i = 0; i < tail; ++i)
    if (in[static_cast<std::size_t>(i)]) sporadic.emplace_back(i);
  return ValueSet(std::move(sporadic), Integer(tail));
}

ValueSet ValueSet::reflected_complement(const ValueSet& base, const std::vector<Integer>& extra,
                                        const Integer& shift) {
  // Z ∖ base = (−∞, floor) ∪ gaps; reflecting x ↦ −shift − x turns (−∞, floor) into a ray.
  std::vector<Integer> sporadic;
  for (const auto& x : base.gaps()) sporadic.push_back(-shift - x);
  for (const auto& x : extra) sporadic.push_back(-shift - x);
  return ValueSet(std::move(sporadic), -shift - base.floor() + 1);
}

bool ValueSet::contains(const Integer& k) const {
  if (k >= tail_) return true;
  return std::binary_search(sporadic_.begin(), sporadic_.end(), k);
}

bool ValueSet::contains(std::int64_t k) const {
  if (!fast_) return contains(Integer(k));
  if (k >= fast_tail_) return true;
  return std::binary_search(fast_sporadic_.begin(), fast_sporadic_.end(), k);
}

std::vector<Integer> ValueSet::gaps() const {
  std::vector<Integer> out;
  std::size_t s = 0;
  for (Integer k = floor_; k < tail_; k += 1) {
    if (s < sporadic_.size() && sporadic_[s] == k) {
      ++s;
      continue;
    }
    out.push_back(k);
  }
  return out;
}

ValueSet ValueSet::shifted(const Integer& c) const {
  std::vector<Integer> s;
  for (const auto& x : sporadic_) s.push_back(x + c);
  return ValueSet(std::move(s), tail_ + c);
}

std::vector<Integer> ValueSet::members_between(const Integer& lo, const Integer& hi) const {
  std::vector<Integer> out;
  for (const auto& x : sporadic_)
    if (x >= lo && x <= hi) out.push_back(x);
  for (Integer k = std::max(lo, tail_); k <= hi; k += 1) out.push_back(k);
  return out;
}

std::string ValueSet::to_string() const {
  std::ostringstream os;
  if (!sporadic_.empty()) {
    os << '{';
    for (std::size_t i = 0; i < sporadic_.size(); ++i) os << (i ? "," : "") << sporadic_[i].str();
    os << "} U ";
  }
  os << '[' << tail_.str() << ",inf)";
  return os.str();
}

}  // namespace dnoether
