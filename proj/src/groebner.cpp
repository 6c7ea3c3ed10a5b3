#include "edgeideal/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "edgeideal/errors.hpp"

namespace edgeideal {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {}

bool GroebnerBasis::is_unit_ideal() const noexcept {
  return generators_.size() == 1 && generators_.front().is_unit();
}

bool GroebnerBasis::contains(const Polynomial& f) const { return normal_form(f, generators_).is_zero(); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of a zero polynomial");
  require_same_ring(*f.ring(), *g.ring());
  const auto& field = f.field();
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = lf.mono.lcm(lg.mono);
  Polynomial left = f.times_term(field.inv(lf.coeff), l / lf.mono);
  return left.minus_term_times(field.inv(lg.coeff), l / lg.mono, g);
}

namespace {

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
  for (const auto& b : basis)
    if (!b.is_zero() && b.leading_monomial().divides(m)) return &b;
  return nullptr;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  for (const auto& b : basis)
    if (!b.is_zero()) require_same_ring(*f.ring(), *b.ring());
  const auto& field = f.field();
  Polynomial rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    if (const Polynomial* g = find_reducer(lt.mono, basis)) {
      const Term& lg = g->leading_term();
      Coeff c = field.mul(lt.coeff, field.inv(lg.coeff));
      rest = rest.minus_term_times(c, lt.mono / lg.mono, *g);
    } else {
      remainder.push_back(lt);
      rest = rest - Polynomial::monomial(f.ring(), lt.mono, lt.coeff);
    }
  }
  // remainder terms were produced in descending order already
  return Polynomial(f.ring(), std::move(remainder));
}

namespace {

struct PendingPair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

class PairQueue {
 public:
  explicit PairQueue(const TermOrder& order)
      : pairs_([&order](const PendingPair& a, const PendingPair& b) {
          auto c = order.compare(a.lcm, b.lcm);
          if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
          return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        }) {}

  void push(PendingPair p) { pairs_.insert(std::move(p)); }
  bool empty() const { return pairs_.empty(); }
  PendingPair pop() {
    auto it = pairs_.begin();
    PendingPair p = *it;
    pairs_.erase(it);
    return p;
  }

 private:
  std::set<PendingPair, std::function<bool(const PendingPair&, const PendingPair&)>> pairs_;
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g) {
  const auto& order = g.front().ring()->order();
  // drop generators whose leading monomial is divisible by another's
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const auto& la = g[a].leading_monomial();
      const auto& lb = g[b].leading_monomial();
      if (lb.divides(la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[a]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(normal_form(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.greater(x.leading_monomial(), y.leading_monomial());
  });
  return reduced;
}

GroebnerBasis run_buchberger(std::span<const Polynomial> generators, const GroebnerLimits& limits,
                             GroebnerStats* stats) {
  if (generators.empty()) throw PreconditionError("Buchberger needs at least one generator");
  RingPtr ring = generators.front().ring();
  for (const auto& f : generators) require_same_ring(*ring, *f.ring());

  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  auto unit_basis = [&] { return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}); };

  std::vector<Polynomial> basis;
  PairQueue queue(ring->order());
  auto add = [&](Polynomial h) {
    h = h.monic();
    std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k)
      queue.push({basis[k].leading_monomial().lcm(h.leading_monomial()), k, idx});
    basis.push_back(std::move(h));
    st.peak_basis_size = std::max(st.peak_basis_size, basis.size());
  };

  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (f.is_unit()) return unit_basis();
    add(f);
  }
  if (basis.empty()) return GroebnerBasis(ring, {});

  while (!queue.empty()) {
    PendingPair p = queue.pop();
    if (++st.pairs_processed > limits.pair_budget)
      throw ResourceLimitError("S-pair budget of " + std::to_string(limits.pair_budget) + " exhausted");
    if (basis[p.i].leading_monomial().coprime(basis[p.j].leading_monomial())) {
      ++st.coprime_skips;
      continue;
    }
    ++st.pairs_reduced;
    Polynomial h = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
    if (h.is_zero()) continue;
    // a constant in the ideal makes {1} the reduced basis either way
    if (h.is_unit()) return unit_basis();
    add(std::move(h));
  }
  return GroebnerBasis(ring, reduce_basis(std::move(basis)));
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const GroebnerLimits& limits,
                         GroebnerStats* stats) {
  return run_buchberger(generators, limits, stats);
}

bool ideal_contains_one(std::span<const Polynomial> generators, const GroebnerLimits& limits,
                        GroebnerStats* stats) {
  return run_buchberger(generators, limits, stats).is_unit_ideal();
}

bool radical_membership(const Polynomial& f, std::span<const Polynomial> generators,
                        const GroebnerLimits& limits, GroebnerStats* stats) {
  if (f.is_zero()) throw DomainError("radical membership of the zero polynomial");
  for (const auto& g : generators) require_same_ring(*f.ring(), *g.ring());
  RingPtr extended = f.ring()->with_extra_variable("t");
  std::vector<Polynomial> gens;
  gens.reserve(generators.size() + 1);
  for (const auto& g : generators) gens.push_back(g.mapped_to(extended));
  // 1 - t*f
  Polynomial t = Polynomial::variable(extended, extended->nvars() - 1);
  gens.push_back(Polynomial::constant(extended, 1) - t * f.mapped_to(extended));
  return ideal_contains_one(gens, limits, stats);
}

}  // namespace edgeideal
