#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "edgeideal/family.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/polynomial.hpp"

namespace edgeideal {

/// Polynomials that generate I(G) up to radical, together with the case
/// that produced them. Every polynomial lives in graph_ring(graph, field).
struct GeneratorSequence {
  FamilySpec spec;
  Graph graph;
  std::string case_tag;
  std::size_t claimed_length = 0;
  std::vector<Polynomial> polys;
};

/// q_0, q_1, ... for the cycle v_1 v_2 ... v_n v_1, where v_i is ring
/// variable vars[i-1]. The shape depends on n mod 3:
///   n = 3m:    x1x2, x1x_n + x2x3, then x_{3i+1}x_{3i+2} and
///              x_{3i}x_{3i+1} + x_{3i+2}x_{3i+3} for 1 <= i < m
///   n = 3m+1:  as above, closed by x_{3m}x_{3m+1}
///   n = 3m+2:  x1x2, x2x3 + x4x5, then x_{3i}x_{3i+1} + x_{3i+2}x_{3i+3} and
///              x_{3i+2}x_{3i+3} + x_{3i+4}x_{3i+5} for 1 <= i < m, closed by
///              x1x_n + x_{3m}x_{3m+1}
std::vector<Polynomial> cycle_polys(const RingPtr& ring, std::span<const std::size_t> vars);

// All generators throw PreconditionError on out-of-range parameters and
// std::logic_error if the emitted length disagrees with the pd formula.

GeneratorSequence cycle_sequence(int n, const PrimeField& field);
GeneratorSequence bicyclic_vertex_sequence(int m, int n, const PrimeField& field);
GeneratorSequence dumbbell_sequence(int m, int k, int n, const PrimeField& field);

/// Dispatch on the family. Lines and disjoint unions have no sequence here
/// and raise DomainError.
GeneratorSequence generator_sequence(const FamilySpec& spec, const PrimeField& field);

}  // namespace edgeideal
