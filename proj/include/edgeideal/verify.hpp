#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/family.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/groebner.hpp"
#include "edgeideal/sequences.hpp"

namespace edgeideal {

struct VerifyOptions {
  GroebnerLimits limits;
  /// Graphs above this size get no homology stage ("formula-only").
  std::size_t homology_vertex_limit = kMaxBettiVertices;
  /// Workers for the per-edge radical checks.
  unsigned threads = 1;
};

struct EdgeCheck {
  std::string edge;
  bool ok;

  friend bool operator==(const EdgeCheck&, const EdgeCheck&) = default;
};

/// Reverse-inclusion outcome over one field.
struct FieldRun {
  std::uint32_t modulus;
  std::vector<bool> reverse;
  GroebnerStats stats;
  double seconds = 0;

  bool ok() const;
};

struct VerificationReport {
  std::string graph;
  std::string case_tag;
  std::vector<std::uint32_t> fields;
  std::vector<bool> forward;
  /// One entry per edge; ok only if the edge is certified over every field.
  std::vector<EdgeCheck> reverse;
  std::vector<FieldRun> per_field;
  std::size_t length = 0;
  int pd_formula = 0;
  /// Empty when the homology stage was skipped.
  std::optional<int> pd_homology;
  bool pass = false;
  double seconds = 0;

  bool formula_only() const noexcept { return !pd_homology.has_value(); }
};

/// For each polynomial: every term is divisible by an edge monomial of g.
std::vector<bool> verify_forward(std::span<const Polynomial> polys, const Graph& g);

/// For each edge monomial m of g (in edge order): m lies in the radical of
/// (polys), decided over `field`. Polynomials are carried into
/// graph_ring(g, field) first. A ResourceLimitError is rethrown with the
/// offending edge named.
std::vector<bool> verify_reverse(std::span<const Polynomial> polys, const Graph& g, const PrimeField& field,
                                 const VerifyOptions& options = {}, GroebnerStats* stats = nullptr);

/// Certificate for the family's own sequence.
VerificationReport certify(const FamilySpec& spec, const std::vector<PrimeField>& fields,
                           const VerifyOptions& options = {});

/// Certificate for an arbitrary sequence claimed for seq.spec, used by the
/// mutation tests. The claimed length is the number of polynomials.
VerificationReport certify_sequence(const GeneratorSequence& seq, const std::vector<PrimeField>& fields,
                                    const VerifyOptions& options = {});

}  // namespace edgeideal
