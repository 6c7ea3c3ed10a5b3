#pragma once

#include <optional>
#include <string>

#include "edgeideal/family.hpp"

namespace edgeideal {

/// A closed-form value together with the congruence branch that produced
/// it, e.g. {3, "n≡2"}.
struct FormulaResult {
  int value;
  std::string case_tag;

  friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

// All of these throw PreconditionError on out-of-range parameters.

/// pd of the n-cycle: 2n/3, (2n+1)/3, (2n-1)/3 for n ≡ 0, 1, 2 (mod 3).
FormulaResult pd_cycle(int n);
/// pd of the path on n vertices: 2n/3, (2n-2)/3, (2n-1)/3 for n ≡ 0, 1, 2.
FormulaResult pd_line(int n);
/// Two cycles glued at one vertex, |V| = m + n - 1.
FormulaResult pd_bicyclic_vertex(int m, int n);
/// Two cycles joined by a path with k interior vertices, |V| = m + n + k.
FormulaResult pd_dumbbell(int m, int k, int n);

/// Arithmetical rank equals height ⌈n/2⌉ for the n-cycle.
bool is_stci_cycle(int n);

/// Formula for any family that has one; nullopt for disjoint unions.
std::optional<FormulaResult> pd_formula(const FamilySpec& spec);

}  // namespace edgeideal
