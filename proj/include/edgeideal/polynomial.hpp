#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/field.hpp"
#include "edgeideal/monomial.hpp"

namespace edgeideal {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// K[x_0..x_{n-1}] with a fixed grevlex order and printable variable names.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names);
  PolyRing(PrimeField field, std::vector<std::string> names, TermOrder order);

  static RingPtr make(PrimeField field, std::vector<std::string> names);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const TermOrder& order() const noexcept { return order_; }

  /// Same ring plus one variable ranked below every existing one.
  RingPtr with_extra_variable(std::string name) const;
  /// Same variables and order over another field.
  RingPtr over(PrimeField field) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

struct Term {
  Coeff coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms, strictly descending in the ring's
/// term order. The empty term list is the zero polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }

  /// Preconditions: nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  /// c * m * (*this)
  Polynomial times_term(Coeff c, const Monomial& m) const;
  /// *this - c * m * g, computed in one merge pass.
  Polynomial minus_term_times(Coeff c, const Monomial& m, const Polynomial& g) const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  /// Same coefficients (as centered integer lifts) and exponents in another
  /// ring with at least as many variables, possibly over another field.
  Polynomial mapped_to(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_compatible(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

struct PolyArith {
  Polynomial sum;
  Polynomial difference;
  Polynomial product;
};

/// Throws FieldMismatchError / DimensionError on incompatible rings.
PolyArith poly_arith(const Polynomial& f, const Polynomial& g);

/// Throws unless both rings agree on field and variable count.
void require_same_ring(const PolyRing& a, const PolyRing& b);

}  // namespace edgeideal
