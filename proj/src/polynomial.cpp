#include "edgeideal/polynomial.hpp"

#include <algorithm>

#include "edgeideal/errors.hpp"

namespace edgeideal {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names)
    : PolyRing(field, names, TermOrder(names.size())) {}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, TermOrder order)
    : field_(field), names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVariables)
    throw DimensionError("ring with " + std::to_string(names_.size()) + " variables exceeds the limit of " +
                         std::to_string(kMaxVariables));
  if (order_.priority().size() != names_.size())
    throw DimensionError("term order size does not match the variable count");
}

RingPtr PolyRing::make(PrimeField field, std::vector<std::string> names) {
  return std::make_shared<const PolyRing>(field, std::move(names));
}

RingPtr PolyRing::with_extra_variable(std::string name) const {
  auto names = names_;
  names.push_back(std::move(name));
  return std::make_shared<const PolyRing>(field_, std::move(names), order_.with_lowest_variable());
}

RingPtr PolyRing::over(PrimeField field) const {
  return std::make_shared<const PolyRing>(field, names_, order_);
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (&a == &b) return;
  if (a.field() != b.field())
    throw FieldMismatchError("polynomials over " + a.field().to_string() + " and " + b.field().to_string());
  if (a.nvars() != b.nvars())
    throw DimensionError("polynomials in " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) +
                         " variables");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw DimensionError("term does not match the ring's variable count");
    t.coeff %= field.modulus();
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff v = ring->field().reduce(c);
  Monomial one(ring->nvars());
  return Polynomial(std::move(ring), std::vector<Term>{{v, one}});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  return Polynomial(std::move(ring), std::vector<Term>{{c, m}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), m);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::require_compatible(const Polynomial& g) const { require_same_ring(*ring_, *g.ring_); }

namespace {

// Merge two descending term lists: a + sign*b where b's coefficients have
// already been transformed by the caller.
template <class BTerm>
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                              BTerm transform) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term tb = transform(b[j]);
    if (i == a.size()) {
      if (tb.coeff != 0) out.push_back(tb);
      ++j;
      continue;
    }
    auto cmp = order.compare(a[i].mono, tb.mono);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      if (tb.coeff != 0) out.push_back(tb);
      ++j;
    } else {
      Coeff c = field.add(a[i].coeff, tb.coeff);
      if (c != 0) out.push_back({c, a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_compatible(g);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, g.terms_, [](const Term& t) { return t; });
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  require_compatible(g);
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, g.terms_, [&](const Term& t) { return Term{field.neg(t.coeff), t.mono}; });
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().neg(t.coeff), t.mono});
  return r;
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= field().modulus();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono});
  return r;
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  c %= field().modulus();
  Polynomial r(ring_);
  if (c == 0) return r;
  // multiplication by a monomial preserves the order, so no re-sort
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field().mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::minus_term_times(Coeff c, const Monomial& m, const Polynomial& g) const {
  require_compatible(g);
  const auto& field = ring_->field();
  Coeff negc = field.neg(c % field.modulus());
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, g.terms_,
                         [&](const Term& t) { return Term{field.mul(t.coeff, negc), t.mono * m}; });
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_compatible(g);
  Polynomial acc(ring_);
  for (const auto& t : g.terms_) acc = acc + times_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

Polynomial Polynomial::mapped_to(const RingPtr& target) const {
  if (target->nvars() < ring_->nvars()) throw DimensionError("target ring has fewer variables");
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_)
    terms.push_back({target->field().reduce(field().lift(t.coeff)), t.mono.extended(target->nvars())});
  return Polynomial(target, std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
      out += t.mono.to_string(ring_->names());
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  return a.terms_ == b.terms_;
}

PolyArith poly_arith(const Polynomial& f, const Polynomial& g) { return {f + g, f - g, f * g}; }

}  // namespace edgeideal
