#include "edgeideal/graph.hpp"

#include <algorithm>
#include <bit>

#include "edgeideal/errors.hpp"

namespace edgeideal {

Graph::Graph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), adjacency_(labels_.size(), 0) {
  if (labels_.size() > kMaxGraphVertices)
    throw DomainError("graph has more than " + std::to_string(kMaxGraphVertices) + " vertices");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j]) throw DomainError("duplicate vertex label " + labels_[i]);
  for (auto [u, v] : edges) {
    if (u >= labels_.size() || v >= labels_.size()) throw DomainError("edge endpoint is not a vertex");
    if (u == v) throw DomainError("loop at " + labels_[u]);
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) throw DomainError("duplicate edge " + labels_[u] + labels_[v]);
    adjacency_[u] |= VertexMask{1} << v;
    adjacency_[v] |= VertexMask{1} << u;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_labeled_edges(std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& edges) {
  auto find = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw DomainError("edge endpoint " + l + " is not a vertex");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<Edge> idx;
  for (const auto& [a, b] : edges) idx.emplace_back(find(a), find(b));
  return Graph(std::move(labels), std::move(idx));
}

std::size_t Graph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw DomainError("unknown vertex " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::degree(std::size_t v) const noexcept {
  return static_cast<std::size_t>(std::popcount(adjacency_[v]));
}

VertexMask Graph::all_vertices() const noexcept {
  return labels_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << labels_.size()) - 1;
}

Graph induced_subgraph(const Graph& g, VertexMask subset) {
  if (subset & ~g.all_vertices()) throw DomainError("subset contains non-vertices");
  std::vector<std::string> labels;
  std::vector<std::size_t> local(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if ((subset >> v) & 1u) {
      local[v] = labels.size();
      labels.push_back(g.labels()[v]);
    }
  }
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : g.edges())
    if (((subset >> u) & 1u) && ((subset >> v) & 1u)) edges.emplace_back(local[u], local[v]);
  return Graph(std::move(labels), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> subset) {
  VertexMask mask = 0;
  for (const auto& l : subset) mask |= VertexMask{1} << g.index_of(l);
  return induced_subgraph(g, mask);
}

std::vector<Monomial> edge_ideal(const Graph& g) {
  std::vector<Monomial> out;
  out.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) out.push_back(Monomial::product_of(g.vertex_count(), {u, v}));
  return out;
}

RingPtr graph_ring(const Graph& g, const PrimeField& field) { return PolyRing::make(field, g.labels()); }

namespace {

bool is_cover(const Graph& g, VertexMask set) {
  for (auto [u, v] : g.edges())
    if (!((set >> u) & 1u) && !((set >> v) & 1u)) return false;
  return true;
}

}  // namespace

std::size_t min_vertex_cover_size(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCoverVertices)
    throw ResourceLimitError("vertex cover search is limited to " + std::to_string(kMaxCoverVertices) +
                             " vertices");
  if (g.edge_count() == 0) return 0;
  const VertexMask limit = VertexMask{1} << n;
  for (std::size_t size = 1; size <= n; ++size) {
    // all n-bit masks with `size` bits set, in increasing order (Gosper)
    VertexMask set = (VertexMask{1} << size) - 1;
    while (set < limit) {
      if (is_cover(g, set)) return size;
      VertexMask c = set & (~set + 1);
      VertexMask r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  return n;
}

}  // namespace edgeideal
