#pragma once

#include "dnoether/integer.hpp"
#include "dnoether/lattice.hpp"

#include <map>
#include <memory>
#include <vector>

namespace dnoether {

using FaceId = int;

struct GeneratorMatrix {
  Eigen::Index dim = 0;
  std::vector<IntVector> columns;

  static GeneratorMatrix from_columns(Eigen::Index dim, std::vector<IntVector> columns);
  static GeneratorMatrix from_matrix(const IntMatrix& a);
  IntMatrix matrix() const;
};

struct Face {
  FaceId id = 0;
  int dim = 0;
  std::vector<int> generator_indices;  // original columns lying on the face, zero columns included
  std::vector<int> generators;         // indices into FaceLattice::generators()
  std::vector<int> facets_above;       // facet ordinals σ with σ ⪰ τ, ascending
  IntLattice span;                     // ℤ(A∩τ)
  IntLattice saturation;               // ℚτ ∩ ℤ^d
  std::vector<IntVector> torsion;      // representatives of saturation / span
};

struct SupportFunction {
  FaceId facet = 0;
  IntVector normal;
  Integer operator()(const IntVector& v) const { return dot(normal, v); }
};

// Faces of the cone over A, ordered by decreasing dimension: id 0 is the whole cone, ids
// 1..f are the facets in lexicographic order of their normals, the last id is {0}.
class FaceLattice {
 public:
  explicit FaceLattice(const GeneratorMatrix& a);

  Eigen::Index dim() const { return dim_; }
  const GeneratorMatrix& input() const { return input_; }
  const std::vector<IntVector>& generators() const { return gens_; }
  // Original column indices represented by each working generator.
  const std::vector<std::vector<int>>& generator_sources() const { return sources_; }
  bool has_zero_column() const { return has_zero_column_; }

  int face_count() const { return static_cast<int>(faces_.size()); }
  const Face& face(FaceId id) const { return faces_.at(static_cast<std::size_t>(id)); }
  const std::vector<Face>& faces() const { return faces_; }
  FaceId full_cone() const { return 0; }
  FaceId zero_face() const { return face_count() - 1; }

  int facet_count() const { return static_cast<int>(facets_.size()); }
  const std::vector<SupportFunction>& facets() const { return facets_; }
  const SupportFunction& facet(int k) const { return facets_.at(static_cast<std::size_t>(k)); }
  FaceId facet_face(int k) const { return facets_.at(static_cast<std::size_t>(k)).facet; }
  bool is_facet(FaceId id) const { return face(id).dim == dim_ - 1; }
  // Facet ordinal of a facet face.
  int facet_index(FaceId id) const;
  int codim(FaceId id) const { return static_cast<int>(dim_) - face(id).dim; }

  bool leq(FaceId a, FaceId b) const;  // a ⪯ b
  FaceId meet(FaceId a, FaceId b) const;
  FaceId join(FaceId a, FaceId b) const;
  // Smallest face containing the given original columns.
  FaceId face_of_indices(const std::vector<int>& columns) const;
  FaceId face_of_generators(const std::vector<int>& working) const;
  FaceId face_of_facets(const std::vector<int>& facets) const;
  // Rays (one-dimensional faces) below the given face, in id order.
  std::vector<FaceId> rays_of(FaceId id) const;

  Integer value(int facet, const IntVector& v) const { return facets_[static_cast<std::size_t>(facet)](v); }
  bool in_cone(const IntVector& v) const;
  bool in_span(const IntVector& v, FaceId id) const { return face(id).saturation.contains(v); }
  std::string face_name(FaceId id) const;

 private:
  Eigen::Index dim_;
  GeneratorMatrix input_;
  std::vector<IntVector> gens_;
  std::vector<std::vector<int>> sources_;
  bool has_zero_column_ = false;
  std::vector<SupportFunction> facets_;
  std::vector<Face> faces_;
  std::map<std::vector<int>, FaceId> by_facets_;
};

using ConePtr = std::shared_ptr<const FaceLattice>;

ConePtr build_cone(const GeneratorMatrix& a);

// Primitive outward-oriented facet normals of the cone spanned by gens in Q^dim, sorted.
// Candidates come from the signed maximal minors of every (dim-1)-subset.
std::vector<IntVector> facet_normals(Eigen::Index dim, const std::vector<IntVector>& gens);

Integer determinant(IntMatrix m);

}  // namespace dnoether
