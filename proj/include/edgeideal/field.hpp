#pragma once

#include <cstdint>
#include <string>

namespace edgeideal {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p). Elements are plain integers in [0, p); the field
/// object only carries the modulus.
class PrimeField {
 public:
  /// Throws PreconditionError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws DomainError on zero.
  Coeff inv(Coeff a) const;

  /// Centered lift to (-p/2, p/2], used when moving small integer
  /// coefficients between fields.
  std::int64_t lift(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  std::string to_string() const { return "GF(" + std::to_string(p_) + ")"; }

 private:
  std::uint32_t p_;
};

}  // namespace edgeideal
