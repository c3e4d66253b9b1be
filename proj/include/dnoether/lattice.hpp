#pragma once

#include "dnoether/integer.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace dnoether {

template <typename Scalar>
struct EchelonResult {
  std::vector<Vector<Scalar>> basis;  // one vector per pivot, pivots strictly increasing
  std::vector<Eigen::Index> pivots;
  std::vector<Vector<Scalar>> rest;   // nonzero leftovers, zero on the first pivot_cols coordinates
};

// Unimodular row elimination over the first pivot_cols coordinates. Pivot entries end up
// positive and the entries above each pivot are reduced into [0, pivot).
template <typename Scalar>
EchelonResult<Scalar> echelon(std::vector<Vector<Scalar>> work, Eigen::Index pivot_cols) {
  EchelonResult<Scalar> out;
  for (Eigen::Index row = 0; row < pivot_cols; ++row) {
    for (;;) {
      std::ptrdiff_t best = -1;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i][row] == 0) continue;
        if (best < 0 || abs_value(work[i][row]) < abs_value(work[static_cast<std::size_t>(best)][row]))
          best = static_cast<std::ptrdiff_t>(i);
      }
      if (best < 0) break;
      const auto b = static_cast<std::size_t>(best);
      bool remaining = false;
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (i == b || work[i][row] == 0) continue;
        const Scalar q = floor_div(work[i][row], work[b][row]);
        work[i] -= q * work[b];
        if (work[i][row] != 0) remaining = true;
      }
      if (!remaining) {
        Vector<Scalar> v = std::move(work[b]);
        if (v[row] < 0) v = -v;
        out.basis.push_back(std::move(v));
        out.pivots.push_back(row);
        work.erase(work.begin() + best);
        break;
      }
    }
  }
  for (auto& v : work)
    if (!is_zero(v)) out.rest.push_back(std::move(v));
  for (std::size_t k = 0; k < out.basis.size(); ++k) {
    const Eigen::Index p = out.pivots[k];
    for (std::size_t j = 0; j < k; ++j) {
      const Scalar q = floor_div(out.basis[j][p], out.basis[k][p]);
      if (q != 0) out.basis[j] -= q * out.basis[k];
    }
  }
  return out;
}

// A subgroup of Z^d held in Hermite normal form. The HNF makes the basis unique, so two
// sublattices are equal iff their bases are, and reduce() yields canonical coset representatives.
template <typename Scalar>
class Sublattice {
 public:
  explicit Sublattice(Eigen::Index dim = 0) : dim_(dim) {}

  static Sublattice span(Eigen::Index dim, const std::vector<Vector<Scalar>>& gens) {
    for (const auto& g : gens)
      if (g.size() != dim) throw DimensionMismatch("generator has wrong length");
    auto ech = echelon<Scalar>(gens, dim);
    Sublattice s(dim);
    s.basis_ = std::move(ech.basis);
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  static Sublattice full(Eigen::Index dim) {
    std::vector<Vector<Scalar>> e;
    for (Eigen::Index i = 0; i < dim; ++i) e.push_back(Vector<Scalar>::Unit(dim, i));
    return span(dim, e);
  }

  Eigen::Index ambient_dim() const { return dim_; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<Vector<Scalar>>& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  Matrix<Scalar> basis_matrix() const {
    Matrix<Scalar> m(dim_, rank());
    for (Eigen::Index k = 0; k < rank(); ++k) m.col(k) = basis_[static_cast<std::size_t>(k)];
    return m;
  }

  // Canonical representative of v + L: entries at pivot rows land in [0, pivot).
  Vector<Scalar> reduce(Vector<Scalar> v) const {
    if (v.size() != dim_) throw DimensionMismatch("reduce: vector has wrong length");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Eigen::Index p = pivots_[k];
      const Scalar q = floor_div(v[p], basis_[k][p]);
      if (q != 0) v -= q * basis_[k];
    }
    return v;
  }

  bool contains(const Vector<Scalar>& v) const { return is_zero(reduce(v)); }

  bool contains(const Sublattice& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("contains: ambient dimensions differ");
    for (const auto& b : other.basis_)
      if (!contains(b)) return false;
    return true;
  }

  bool congruent(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    return contains(Vector<Scalar>(a - b));
  }

  // Coefficients of v in the HNF basis; nullopt when v is not in the lattice.
  std::optional<Vector<Scalar>> coordinates(Vector<Scalar> v) const {
    Vector<Scalar> c = Vector<Scalar>::Zero(rank());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Eigen::Index p = pivots_[k];
      if (v[p] % basis_[k][p] != 0) return std::nullopt;
      const Scalar q = v[p] / basis_[k][p];
      c[static_cast<Eigen::Index>(k)] = q;
      v -= q * basis_[k];
    }
    if (!is_zero(v)) return std::nullopt;
    return c;
  }

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    if (a.dim_ != b.dim_ || a.basis_.size() != b.basis_.size() || a.pivots_ != b.pivots_) return false;
    for (std::size_t k = 0; k < a.basis_.size(); ++k)
      for (Eigen::Index i = 0; i < a.dim_; ++i)
        if (a.basis_[k][i] != b.basis_[k][i]) return false;
    return true;
  }

 private:
  Eigen::Index dim_;
  std::vector<Vector<Scalar>> basis_;
  std::vector<Eigen::Index> pivots_;
};

// {x in Z^d : <w, x> = 0 for every w}.
template <typename Scalar>
Sublattice<Scalar> integer_kernel(Eigen::Index dim, const std::vector<Vector<Scalar>>& forms) {
  const auto m = static_cast<Eigen::Index>(forms.size());
  std::vector<Vector<Scalar>> rows;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector<Scalar> r = Vector<Scalar>::Zero(m + dim);
    for (Eigen::Index k = 0; k < m; ++k) r[k] = forms[static_cast<std::size_t>(k)][i];
    r[m + i] = 1;
    rows.push_back(std::move(r));
  }
  auto ech = echelon<Scalar>(std::move(rows), m);
  std::vector<Vector<Scalar>> kernel;
  for (const auto& r : ech.rest) kernel.emplace_back(r.tail(dim));
  return Sublattice<Scalar>::span(dim, kernel);
}

// The saturation QL ∩ Z^d.
template <typename Scalar>
Sublattice<Scalar> saturation(const Sublattice<Scalar>& lat) {
  const auto d = lat.ambient_dim();
  if (lat.rank() == 0) return Sublattice<Scalar>(d);
  if (lat.rank() == d) return Sublattice<Scalar>::full(d);
  const auto perp = integer_kernel<Scalar>(d, lat.basis());
  return integer_kernel<Scalar>(d, perp.basis());
}

// One representative per class of sat / lat, each reduced modulo lat, sorted lexicographically.
// Requires lat ⊆ sat with equal rank.
template <typename Scalar>
std::vector<Vector<Scalar>> quotient_representatives(const Sublattice<Scalar>& sat,
                                                     const Sublattice<Scalar>& lat) {
  if (sat.rank() != lat.rank() || !sat.contains(lat))
    throw std::invalid_argument("quotient_representatives: not a finite-index sublattice");
  const auto r = sat.rank();
  std::vector<Vector<Scalar>> coords;
  for (const auto& b : lat.basis()) coords.push_back(*sat.coordinates(b));
  const auto inner = Sublattice<Scalar>::span(r, coords);
  std::vector<Scalar> bound;
  for (Eigen::Index k = 0; k < r; ++k) bound.push_back(inner.basis()[static_cast<std::size_t>(k)][k]);

  std::vector<Vector<Scalar>> reps;
  Vector<Scalar> x = Vector<Scalar>::Zero(r);
  for (;;) {
    Vector<Scalar> v = Vector<Scalar>::Zero(sat.ambient_dim());
    for (Eigen::Index k = 0; k < r; ++k)
      if (x[k] != 0) v += x[k] * sat.basis()[static_cast<std::size_t>(k)];
    reps.push_back(lat.reduce(std::move(v)));
    Eigen::Index k = 0;
    while (k < r) {
      x[k] += 1;
      if (x[k] < bound[static_cast<std::size_t>(k)]) break;
      x[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  std::sort(reps.begin(), reps.end(), [](const Vector<Scalar>& a, const Vector<Scalar>& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  });
  return reps;
}

// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.
template <typename Scalar>
std::vector<Scalar> smith_invariants(Matrix<Scalar> a) {
  std::vector<Scalar> out;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs_value(a(i, j)) < abs_value(a(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return out;
      a.row(t).swap(a.row(pi));
      a.col(t).swap(a.col(pj));
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        const Scalar q = floor_div(a(i, t), a(t, t));
        if (q != 0) a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        const Scalar q = floor_div(a(t, j), a(t, t));
        if (q != 0) a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      a.row(t) += a.row(bad);
    }
    out.push_back(abs_value(a(t, t)));
  }
  return out;
}

// [Z^d : ZA] for the columns of A, or nullopt when ZA has lower rank.
template <typename Scalar>
std::optional<Scalar> group_index_full(const Matrix<Scalar>& a) {
  const auto inv = smith_invariants<Scalar>(a);
  if (static_cast<Eigen::Index>(inv.size()) < a.rows()) return std::nullopt;
  Scalar p = 1;
  for (const auto& x : inv) p *= x;
  return p;
}

using IntLattice = Sublattice<Integer>;

}  // namespace dnoether
