#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "edgeideal/complex.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

inline constexpr std::size_t kMaxBettiVertices = 20;

/// Graded Betti numbers beta_{i,d} of R/I(G); only nonzero entries stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, degree d)

  std::size_t at(int i, int d) const;
  void add(int i, int d, std::size_t dim);
  const std::map<Key, std::size_t>& entries() const noexcept { return entries_; }
  /// Largest homological index with a nonzero entry; 0 for an empty table.
  int max_index() const noexcept;
  /// Header "i,d,dim" then one row per entry in (i, d) order.
  std::string to_csv() const;

  BettiTable& operator+=(const BettiTable& o);
  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::size_t> entries_;
};

/// beta_{i,d} = sum over induced subgraphs H on d vertices of
/// dim H~_{i-2}(eps(H)). Throws ResourceLimitError above kMaxBettiVertices.
/// Subsets are split across `threads` workers; the result does not depend
/// on the split.
BettiTable betti_table(const Graph& g, const PrimeField& field, unsigned threads = 1);

/// Top homological index of betti_table(g). Throws DomainError on an
/// edgeless graph.
int projective_dimension(const Graph& g, const PrimeField& field);

}  // namespace edgeideal
