#include "edgeideal/betti.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>
#include <vector>

#include "edgeideal/errors.hpp"

namespace edgeideal {

std::size_t BettiTable::at(int i, int d) const {
  auto it = entries_.find({i, d});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int d, std::size_t dim) {
  if (dim != 0) entries_[{i, d}] += dim;
}

int BettiTable::max_index() const noexcept {
  int best = 0;
  for (const auto& [key, dim] : entries_) best = std::max(best, key.first);
  return best;
}

std::string BettiTable::to_csv() const {
  std::ostringstream out;
  out << "i,d,dim\n";
  for (const auto& [key, dim] : entries_) out << key.first << ',' << key.second << ',' << dim << '\n';
  return out.str();
}

BettiTable& BettiTable::operator+=(const BettiTable& o) {
  for (const auto& [key, dim] : o.entries_) add(key.first, key.second, dim);
  return *this;
}

namespace {

// Contribution of one vertex subset; empty unless the induced subgraph has
// an edge and no isolated vertex. An isolated vertex lies in every facet of
// eps(H), so eps(H) is a cone and acyclic.
BettiTable subset_contribution(const Graph& g, VertexMask subset, const PrimeField& field) {
  BettiTable t;
  bool has_edge = false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!((subset >> v) & 1u)) continue;
    if ((g.neighbors(v) & subset) == 0) return t;
    has_edge = true;
  }
  if (!has_edge) return t;
  Graph h = induced_subgraph(g, subset);
  const int d = std::popcount(subset);
  for (auto [deg, dim] : reduced_homology_dims(epsilon_complex(h), field)) t.add(deg + 2, d, dim);
  return t;
}

}  // namespace

BettiTable betti_table(const Graph& g, const PrimeField& field, unsigned threads) {
  if (g.vertex_count() > kMaxBettiVertices)
    throw ResourceLimitError("Betti tables are limited to graphs with " + std::to_string(kMaxBettiVertices) +
                             " vertices");
  const VertexMask all = g.all_vertices();
  threads = std::max(1u, threads);
  std::vector<BettiTable> partial(threads);
  auto work = [&](unsigned w) {
    for (VertexMask subset = 1 + w; subset <= all; subset += threads)
      partial[w] += subset_contribution(g, subset, field);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  BettiTable table;
  for (const auto& p : partial) table += p;
  return table;
}

int projective_dimension(const Graph& g, const PrimeField& field) {
  if (g.edge_count() == 0) throw DomainError("projective dimension of an edgeless graph's ideal");
  return betti_table(g, field).max_index();
}

}  // namespace edgeideal
