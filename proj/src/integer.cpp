#include "dnoether/integer.hpp"

#include <limits>
#include <sstream>

namespace dnoether {

IntVector make_vector(std::initializer_list<long long> xs) {
  return make_vector(std::vector<long long>(xs));
}

IntVector make_vector(const std::vector<long long>& xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = Integer(xs[i]);
  return v;
}

IntMatrix columns_to_matrix(const std::vector<IntVector>& cols) {
  if (cols.empty()) return IntMatrix(0, 0);
  IntMatrix m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw DimensionMismatch("columns of unequal length");
    m.col(static_cast<Eigen::Index>(j)) = cols[j];
  }
  return m;
}

std::vector<IntVector> matrix_columns(const IntMatrix& m) {
  std::vector<IntVector> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.emplace_back(m.col(j));
  return out;
}

std::int64_t to_int64(const Integer& x) {
  static const Integer lo(std::numeric_limits<std::int64_t>::min());
  static const Integer hi(std::numeric_limits<std::int64_t>::max());
  if (x < lo || x > hi) throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return x.convert_to<std::int64_t>();
}

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].str();
  }
  os << ')';
  return os.str();
}

std::size_t VectorHash::operator()(const IntVector& v) const {
  std::size_t h = static_cast<std::size_t>(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const long x = mpz_get_si(v[i].backend().data());
    h ^= std::hash<long>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dnoether
