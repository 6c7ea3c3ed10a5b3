#include "edgeideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

void check_size(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw DimensionError("ring with " + std::to_string(nvars) + " variables exceeds the limit of " +
                         std::to_string(kMaxVariables));
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_size(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.set(index, 1);
  return m;
}

Monomial Monomial::product_of(std::size_t nvars, std::initializer_list<std::size_t> indices) {
  Monomial m(nvars);
  for (auto i : indices) m.set(i, m[i] + 1);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw DimensionError("variable index " + std::to_string(i) + " out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.begin() + nvars_, [](Exponent e) { return e <= 1; });
}

void Monomial::require_same_ring(const Monomial& other) const {
  if (nvars_ != other.nvars_)
    throw DimensionError("monomials from rings with " + std::to_string(nvars_) + " and " +
                         std::to_string(other.nvars_) + " variables");
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_ring(other);
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_ring(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  require_same_ring(divisor);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ring(other);
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw DimensionError("cannot shrink a monomial's ring");
  Monomial r(nvars);
  r.exps_ = exps_;
  r.degree_ = degree_;
  return r;
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + nvars_);
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

MonomialOps monomial_ops(const Monomial& a, const Monomial& b) {
  return {a * b, a.divides(b), a.lcm(b)};
}

TermOrder::TermOrder(std::size_t nvars) : priority_(nvars) {
  std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

TermOrder::TermOrder(std::vector<std::size_t> priority) : priority_(std::move(priority)) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw PreconditionError("term order priority is not a permutation");
  for (std::size_t i = 0; i < priority_.size(); ++i)
    if (priority_[i] != i) identity_ = false;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Same degree: scan from the least significant variable; the monomial
  // with the smaller exponent there is the larger one.
  for (std::size_t r = priority_.size(); r-- > 0;) {
    std::size_t v = identity_ ? r : priority_[r];
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::with_lowest_variable() const {
  auto p = priority_;
  p.push_back(p.size());
  return TermOrder(std::move(p));
}

}  // namespace edgeideal
