#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/monomial.hpp"
#include "edgeideal/polynomial.hpp"

namespace edgeideal {

using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxGraphVertices = 64;

/// Simple undirected graph on named vertices. Vertex i is bound to ring
/// variable i, so label order is variable order.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Edges are index pairs; throws DomainError on loops, duplicates or
  /// unknown endpoints.
  Graph(std::vector<std::string> labels, std::vector<Edge> edges);
  /// Same, with edges given by label.
  static Graph from_labeled_edges(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Sorted lexicographically by (smaller index, larger index).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t index_of(const std::string& label) const;
  VertexMask neighbors(std::size_t v) const noexcept { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const noexcept;
  bool has_edge(std::size_t u, std::size_t v) const noexcept { return (adjacency_[u] >> v) & 1u; }
  VertexMask all_vertices() const noexcept;
  std::string edge_label(const Edge& e) const { return labels_[e.first] + labels_[e.second]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adjacency_;
};

/// Induced subgraph on the vertices in `subset`, kept in the parent's
/// vertex order.
Graph induced_subgraph(const Graph& g, VertexMask subset);
/// Throws DomainError on an unknown label.
Graph induced_subgraph(const Graph& g, std::span<const std::string> subset);

/// One squarefree quadratic monomial per edge in a ring with one variable
/// per vertex, in edge order.
std::vector<Monomial> edge_ideal(const Graph& g);

/// Ring over `field` whose variables are the graph's labels.
RingPtr graph_ring(const Graph& g, const PrimeField& field);

inline constexpr std::size_t kMaxCoverVertices = 25;

/// Exact minimum vertex cover by subset search in increasing size. Throws
/// ResourceLimitError above kMaxCoverVertices vertices.
std::size_t min_vertex_cover_size(const Graph& g);

}  // namespace edgeideal
