#include "edgeideal/field.hpp"

#include "edgeideal/errors.hpp"

namespace edgeideal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw PreconditionError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in " + to_string());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

}  // namespace edgeideal
