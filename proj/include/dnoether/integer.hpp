#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnoether {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Floor division and a modulus that always lands in [0, |b|).
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
Scalar floor_mod(const Scalar& a, const Scalar& b) {
  return a - b * floor_div(a, b);
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Scalar r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <typename Scalar>
bool is_zero(const Vector<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

template <typename Scalar>
Scalar dot(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Scalar s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <typename Scalar>
Scalar content(const Vector<Scalar>& v) {
  Scalar g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_value(g, v[i]);
  return g;
}

IntVector make_vector(std::initializer_list<long long> xs);
IntVector make_vector(const std::vector<long long>& xs);
IntMatrix columns_to_matrix(const std::vector<IntVector>& cols);
std::vector<IntVector> matrix_columns(const IntMatrix& m);

// Checked narrowing for values that index bounded grids.
std::int64_t to_int64(const Integer& x);

std::string to_string(const Integer& x);
std::string to_string(const IntVector& v);

struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

struct VectorEqual {
  bool operator()(const IntVector& a, const IntVector& b) const {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
};

struct VectorHash {
  std::size_t operator()(const IntVector& v) const;
};

inline bool equal(const IntVector& a, const IntVector& b) { return VectorEqual{}(a, b); }

}  // namespace dnoether
