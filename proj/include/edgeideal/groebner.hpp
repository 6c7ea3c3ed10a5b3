#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "edgeideal/polynomial.hpp"

namespace edgeideal {

inline constexpr std::size_t kDefaultPairBudget = 200000;

struct GroebnerLimits {
  /// Maximum number of S-pairs taken off the queue before giving up with
  /// ResourceLimitError.
  std::size_t pair_budget = kDefaultPairBudget;
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_reduced = 0;
  std::size_t coprime_skips = 0;
  std::size_t peak_basis_size = 0;

  GroebnerStats& operator+=(const GroebnerStats& o) {
    pairs_processed += o.pairs_processed;
    pairs_reduced += o.pairs_reduced;
    coprime_skips += o.coprime_skips;
    peak_basis_size = std::max(peak_basis_size, o.peak_basis_size);
    return *this;
  }
};

/// Reduced Groebner basis: monic generators, sorted by descending leading
/// monomial, none of whose leading monomials divides another's.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_unit_ideal() const noexcept;
  bool contains(const Polynomial& f) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// (lcm/lt(f))*f - (lcm/lt(g))*g with leading coefficients normalised so the
/// leading terms cancel. Throws DomainError on a zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full multivariate division remainder: no term of the result is divisible
/// by a leading monomial of `basis`. Zero entries of `basis` are ignored.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime-leading-monomial criterion.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const GroebnerLimits& limits = {},
                         GroebnerStats* stats = nullptr);

/// True iff the generated ideal is the whole ring. Stops as soon as a
/// nonzero constant shows up.
bool ideal_contains_one(std::span<const Polynomial> generators, const GroebnerLimits& limits = {},
                        GroebnerStats* stats = nullptr);

/// Rabinowitsch test: f lies in the radical of (generators) iff
/// (generators, 1 - t*f) is the unit ideal in R[t]. Throws DomainError on
/// zero f.
bool radical_membership(const Polynomial& f, std::span<const Polynomial> generators,
                        const GroebnerLimits& limits = {}, GroebnerStats* stats = nullptr);

}  // namespace edgeideal
