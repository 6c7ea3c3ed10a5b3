#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edgeideal/graph.hpp"

namespace edgeideal {

struct FamilySpec;

struct CycleSpec {
  int n;
};
struct LineSpec {
  int n;
};
/// Cycles C_m (x-block) and C_n (y-block) sharing x1 = y1.
struct BicyclicSpec {
  int m;
  int n;
};
/// Cycles C_m and C_n joined by the path x1 z1 ... zk y1; k = 0 is the
/// single bridge edge x1y1.
struct DumbbellSpec {
  int m;
  int k;
  int n;
};
struct UnionSpec {
  std::vector<FamilySpec> parts;
};

/// A graph family instance. Text form (the CLI mini-language):
///   cycle:7  line:5  bicyclic:4,5  dumbbell:3,1,4  union:cycle:4+line:2
struct FamilySpec {
  std::variant<CycleSpec, LineSpec, BicyclicSpec, DumbbellSpec, UnionSpec> kind;

  std::string to_string() const;
  /// Throws PreconditionError when a parameter is out of range.
  void validate() const;
};

/// Throws ParseError on malformed text and PreconditionError on
/// out-of-range parameters.
FamilySpec parse_family_spec(std::string_view text);

/// Labels follow the x, y, z block order. Disjoint-union operands after the
/// first get one prime per position appended to every label (x1', x1'', ...).
Graph build(const FamilySpec& spec);

}  // namespace edgeideal
