#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

using FaceMask = std::uint32_t;
inline constexpr std::size_t kMaxComplexVertices = 22;

/// Finite simplicial complex stored by its inclusion-maximal facets, each a
/// bitmask over the vertex list.
///
/// Two degenerate complexes are kept apart: the void complex has no faces
/// at all, while {∅} has exactly the empty face. They differ in reduced
/// homology (zero everywhere versus one class in degree -1).
class SimplicialComplex {
 public:
  /// The void complex on `vertices`.
  explicit SimplicialComplex(std::vector<std::string> vertices);
  /// Non-maximal and repeated facets are dropped.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<FaceMask> facets);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<FaceMask>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(FaceMask face) const noexcept;
  /// -2 for the void complex, -1 for {∅}.
  int dimension() const noexcept;
  /// All faces (including ∅ unless void), grouped by dimension + 1 and
  /// sorted by mask inside each group.
  std::vector<std::vector<FaceMask>> faces_by_size() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<FaceMask> facets_;
};

/// Degree i -> dim H~_i, nonzero entries only.
using HomologyProfile = std::map<int, std::size_t>;

/// Vertex set V(h), one facet V(h) \ e per edge. Throws DomainError on an
/// edgeless graph and ResourceLimitError above kMaxComplexVertices.
SimplicialComplex epsilon_complex(const Graph& h);

/// Reduced simplicial homology over GF(p) from boundary-matrix ranks, with
/// the augmentation map as the boundary of vertices.
HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const PrimeField& field);

/// Sum over i of (-1)^i * (number of i-dimensional faces), i >= -1.
long reduced_euler_characteristic(const SimplicialComplex& c);

/// Profile shifted up by `by` degrees.
HomologyProfile shifted(const HomologyProfile& h, int by);

}  // namespace edgeideal
