#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace edgeideal {

/// Hard cap on ambient ring size. Graph rings here stay below 25
/// variables plus one auxiliary variable.
inline constexpr std::size_t kMaxVariables = 32;

using Exponent = std::uint16_t;

/// Dense exponent vector with a fixed ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  /// The identity monomial (all exponents zero) in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index);
  static Monomial product_of(std::size_t nvars, std::initializer_list<std::size_t> indices);

  std::size_t size() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;

  /// this | other (componentwise <=).
  bool divides(const Monomial& other) const;
  /// No variable appears in both.
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the caller guarantees `divisor` divides *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  /// The same exponents in a ring with `nvars >= size()` variables.
  Monomial extended(std::size_t nvars) const;

  std::vector<unsigned> exponents() const;
  /// "x1*x2^2" style rendering; "1" for the identity.
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }
  /// Plain lexicographic order on exponent vectors, for use as a map key.
  /// It is not a term order; see TermOrder.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ < b.exps_;
  }

 private:
  void require_same_ring(const Monomial& other) const;

  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
  std::array<Exponent, kMaxVariables> exps_{};
};

struct MonomialOps {
  Monomial product;
  bool divides;
  Monomial lcm;
};

/// Product, divisibility a | b, and lcm. Throws DimensionError when the
/// ambient variable counts differ.
MonomialOps monomial_ops(const Monomial& a, const Monomial& b);

/// Graded reverse lexicographic order. `priority[0]` names the most
/// significant variable; reverse-lex tie-breaks look at the least
/// significant variable first.
class TermOrder {
 public:
  TermOrder() = default;
  /// Identity priority: x_0 > x_1 > ... > x_{n-1}.
  explicit TermOrder(std::size_t nvars);
  explicit TermOrder(std::vector<std::size_t> priority);

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }
  /// Appends one variable at the lowest priority.
  TermOrder with_lowest_variable() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::vector<std::size_t> priority_;
  bool identity_ = true;
};

}  // namespace edgeideal
