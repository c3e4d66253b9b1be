#include "dnoether/cone.hpp"

#include "dnoether/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dnoether {

GeneratorMatrix GeneratorMatrix::from_columns(Eigen::Index dim, std::vector<IntVector> columns) {
  if (dim < 1) throw DimensionMismatch("ambient dimension must be positive");
  for (const auto& c : columns)
    if (c.size() != dim) throw DimensionMismatch("column length differs from d");
  GeneratorMatrix g;
  g.dim = dim;
  g.columns = std::move(columns);
  return g;
}

GeneratorMatrix GeneratorMatrix::from_matrix(const IntMatrix& a) {
  return from_columns(a.rows(), matrix_columns(a));
}

IntMatrix GeneratorMatrix::matrix() const {
  IntMatrix m(dim, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = columns[j];
  return m;
}

Integer determinant(IntMatrix m) {
  // Fraction-free Gaussian elimination (Bareiss).
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  if (n == 0) return Integer(1);
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return Integer(0);
      m.row(k).swap(m.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<IntVector> facet_normals(Eigen::Index dim, const std::vector<IntVector>& gens) {
  std::set<IntVector, LexLess> found;
  const auto m = gens.size();
  const auto k = static_cast<std::size_t>(dim - 1);
  if (k > m) return {};
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    IntMatrix sub(dim, static_cast<Eigen::Index>(k));
    for (std::size_t j = 0; j < k; ++j) sub.col(static_cast<Eigen::Index>(j)) = gens[pick[j]];
    IntVector normal(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      IntMatrix minor(dim - 1, static_cast<Eigen::Index>(k));
      for (Eigen::Index r = 0, t = 0; r < dim; ++r)
        if (r != i) minor.row(t++) = sub.row(r);
      const Integer det = determinant(minor);
      normal[i] = (i % 2 == 0) ? det : Integer(-det);
    }
    if (!is_zero(normal)) {
      const Integer g = content(normal);
      for (Eigen::Index i = 0; i < dim; ++i) normal[i] /= g;
      bool pos = false, neg = false;
      for (const auto& v : gens) {
        const Integer s = dot(normal, v);
        if (s > 0) pos = true;
        if (s < 0) neg = true;
      }
      if (!(pos && neg) && (pos || neg)) found.insert(neg ? IntVector(-normal) : normal);
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

namespace {

bool vanishes_on(const IntVector& normal, const std::vector<IntVector>& gens, const std::vector<int>& which) {
  for (int g : which)
    if (dot(normal, gens[static_cast<std::size_t>(g)]) != 0) return false;
  return true;
}

}  // namespace

FaceLattice::FaceLattice(const GeneratorMatrix& a) : dim_(a.dim), input_(a) {
  if (dim_ < 1) throw DimensionMismatch("ambient dimension must be positive");
  std::vector<int> zero_columns;
  for (std::size_t j = 0; j < a.columns.size(); ++j) {
    const auto& c = a.columns[j];
    if (c.size() != dim_) throw DimensionMismatch("column length differs from d");
    if (is_zero(c)) {
      has_zero_column_ = true;
      zero_columns.push_back(static_cast<int>(j));
      continue;
    }
    auto it = std::find_if(gens_.begin(), gens_.end(), [&](const IntVector& g) { return equal(g, c); });
    if (it == gens_.end()) {
      gens_.push_back(c);
      sources_.push_back({static_cast<int>(j)});
    } else {
      sources_[static_cast<std::size_t>(it - gens_.begin())].push_back(static_cast<int>(j));
    }
  }

  // Pointedness is checked inside the linear span so that it is reported before rank problems.
  const auto lin = IntLattice::span(dim_, gens_);
  if (lin.rank() > 0) {
    std::vector<IntVector> coords;
    for (const auto& g : gens_) coords.push_back(*lin.coordinates(g));
    const auto normals = facet_normals(lin.rank(), coords);
    if (IntLattice::span(lin.rank(), normals).rank() != lin.rank())
      throw NotStronglyConvex("the cone spanned by A contains a line");
  }
  if (lin.rank() < dim_)
    throw NotFullRank("ZA has rank " + std::to_string(lin.rank()) + " < d = " + std::to_string(dim_));
  const auto index = group_index_full<Integer>(columns_to_matrix(gens_));
  if (!index || *index != 1)
    throw NotFullRank("ZA has index " + (index ? index->str() : std::string("inf")) + " in Z^d");

  const auto normals = facet_normals(dim_, gens_);
  for (const auto& n : normals) facets_.push_back(SupportFunction{0, n});
  const int f = facet_count();

  auto closure = [&](const std::vector<int>& gs) {
    std::vector<int> fs;
    for (int k = 0; k < f; ++k)
      if (vanishes_on(facets_[static_cast<std::size_t>(k)].normal, gens_, gs)) fs.push_back(k);
    return fs;
  };
  auto gens_on = [&](const std::vector<int>& fs) {
    std::vector<int> gs;
    for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
      bool on = true;
      for (int k : fs)
        if (dot(facets_[static_cast<std::size_t>(k)].normal, gens_[static_cast<std::size_t>(g)]) != 0) on = false;
      if (on) gs.push_back(g);
    }
    return gs;
  };

  std::map<std::vector<int>, std::vector<int>> found;  // facets above -> generators
  std::deque<std::vector<int>> queue;
  found[{}] = gens_on({});
  queue.push_back({});
  while (!queue.empty()) {
    const auto key = queue.front();
    queue.pop_front();
    const auto gs = found[key];
    for (int k = 0; k < f; ++k) {
      if (std::binary_search(key.begin(), key.end(), k)) continue;
      std::vector<int> next;
      for (int g : gs)
        if (dot(facets_[static_cast<std::size_t>(k)].normal, gens_[static_cast<std::size_t>(g)]) == 0) next.push_back(g);
      auto fs = closure(next);
      if (found.count(fs)) continue;
      found[fs] = next;
      queue.push_back(fs);
    }
  }

  for (const auto& [key, gs] : found) {
    Face face;
    face.facets_above = key;
    face.generators = gs;
    std::vector<IntVector> vs;
    for (int g : gs) {
      vs.push_back(gens_[static_cast<std::size_t>(g)]);
      for (int src : sources_[static_cast<std::size_t>(g)]) face.generator_indices.push_back(src);
    }
    face.generator_indices.insert(face.generator_indices.end(), zero_columns.begin(), zero_columns.end());
    std::sort(face.generator_indices.begin(), face.generator_indices.end());
    face.span = IntLattice::span(dim_, vs);
    face.dim = static_cast<int>(face.span.rank());
    face.saturation = saturation(face.span);
    face.torsion = quotient_representatives(face.saturation, face.span);
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& x, const Face& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.facets_above < y.facets_above;
  });
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    faces_[i].id = static_cast<FaceId>(i);
    by_facets_[faces_[i].facets_above] = faces_[i].id;
  }
  for (int k = 0; k < f; ++k) facets_[static_cast<std::size_t>(k)].facet = by_facets_.at({k});
}

int FaceLattice::facet_index(FaceId id) const {
  const auto& fs = face(id).facets_above;
  if (!is_facet(id) || fs.size() != 1) throw std::invalid_argument("face is not a facet");
  return fs.front();
}

bool FaceLattice::leq(FaceId a, FaceId b) const {
  const auto& fa = face(a).facets_above;
  const auto& fb = face(b).facets_above;
  return std::includes(fa.begin(), fa.end(), fb.begin(), fb.end());
}

FaceId FaceLattice::face_of_facets(const std::vector<int>& fs) const {
  std::vector<int> gs;
  for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
    bool on = true;
    for (int k : fs)
      if (value(k, gens_[static_cast<std::size_t>(g)]) != 0) on = false;
    if (on) gs.push_back(g);
  }
  return face_of_generators(gs);
}

FaceId FaceLattice::face_of_generators(const std::vector<int>& working) const {
  std::vector<int> fs;
  for (int k = 0; k < facet_count(); ++k)
    if (vanishes_on(facets_[static_cast<std::size_t>(k)].normal, gens_, working)) fs.push_back(k);
  return by_facets_.at(fs);
}

FaceId FaceLattice::meet(FaceId a, FaceId b) const {
  std::vector<int> fs;
  const auto& fa = face(a).facets_above;
  const auto& fb = face(b).facets_above;
  std::set_union(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(fs));
  return face_of_facets(fs);
}

FaceId FaceLattice::join(FaceId a, FaceId b) const {
  std::vector<int> gs;
  const auto& ga = face(a).generators;
  const auto& gb = face(b).generators;
  std::set_union(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(gs));
  return face_of_generators(gs);
}

FaceId FaceLattice::face_of_indices(const std::vector<int>& columns) const {
  std::vector<int> gs;
  for (int c : columns) {
    if (c < 0 || c >= static_cast<int>(input_.columns.size())) throw std::out_of_range("column index");
    for (std::size_t g = 0; g < sources_.size(); ++g)
      if (std::find(sources_[g].begin(), sources_[g].end(), c) != sources_[g].end()) gs.push_back(static_cast<int>(g));
  }
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  return face_of_generators(gs);
}

std::vector<FaceId> FaceLattice::rays_of(FaceId id) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.dim == 1 && leq(f.id, id)) out.push_back(f.id);
  return out;
}

bool FaceLattice::in_cone(const IntVector& v) const {
  for (const auto& f : facets_)
    if (f(v) < 0) return false;
  return true;
}

std::string FaceLattice::face_name(FaceId id) const {
  if (is_facet(id)) return "sigma" + std::to_string(facet_index(id) + 1);
  if (id == zero_face()) return "{0}";
  if (id == full_cone()) return "cone";
  return "tau" + std::to_string(id);
}

ConePtr build_cone(const GeneratorMatrix& a) { return std::make_shared<const FaceLattice>(a); }

}  // namespace dnoether
