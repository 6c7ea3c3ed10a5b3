#pragma once

#include <map>
#include <string>
#include <vector>

#include "edgeideal/monomial.hpp"
#include "edgeideal/polynomial.hpp"

namespace edgeideal {

/// Ordered partition P_0, ..., P_r of a finite monomial set, with an
/// exponent e(p) >= 1 per element (missing entries mean 1).
struct SvPartition {
  std::vector<Monomial> target;
  std::vector<std::vector<Monomial>> parts;
  std::map<Monomial, unsigned> exponents;
  /// Variable names for diagnostics; optional.
  std::vector<std::string> names;
};

struct SvCheck {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that
///   (i)   the parts are disjoint and their union is the target set,
///   (ii)  P_0 has exactly one element,
///   (iii) for i > 0 and distinct p, p' in P_i, some element of an earlier
///         part divides p * p'.
/// Never throws on malformed input; every violation is listed instead.
SvCheck sv_check(const SvPartition& p);

/// q_i = sum over m in P_i of m^e(m). Throws PreconditionError (carrying
/// the violations) when sv_check fails.
std::vector<Polynomial> sv_sums(const SvPartition& p, const RingPtr& ring);

/// Partition behind the n-cycle sequence for n ≡ 0, 1 (mod 3): the
/// monomial generators first, then the binomials, each as its summand set.
/// Throws PreconditionError for other n.
SvPartition cycle_sv_partition(int n);

}  // namespace edgeideal
