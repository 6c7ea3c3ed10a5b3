#include "edgeideal/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "edgeideal/case_table.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/formulas.hpp"

namespace edgeideal {

namespace {

Polynomial edge_poly(const RingPtr& ring, std::size_t u, std::size_t v) {
  return Polynomial::monomial(ring, Monomial::product_of(ring->nvars(), {u, v}));
}

std::vector<std::size_t> iota_vars(std::size_t from, std::size_t count) {
  std::vector<std::size_t> out(count);
  std::iota(out.begin(), out.end(), from);
  return out;
}

void check_length(const GeneratorSequence& seq, int expected) {
  if (seq.polys.size() != static_cast<std::size_t>(expected))
    throw std::logic_error(seq.spec.to_string() + ": emitted " + std::to_string(seq.polys.size()) +
                           " polynomials, formula says " + std::to_string(expected));
}

// Instantiates a case-table template. `a` and `b` are the cycle vertex
// lists in template roles (each starting at its attachment vertex); `path`
// is z_0 .. z_{k+1}, empty for the bicyclic family.
class TemplateEvaluator {
 public:
  TemplateEvaluator(RingPtr ring, std::span<const std::size_t> a, std::span<const std::size_t> b,
                    std::vector<std::size_t> path, const CaseRow& row)
      : ring_(std::move(ring)),
        a_(cycle_polys(ring_, a)),
        b_(cycle_polys(ring_, b)),
        path_(std::move(path)),
        row_(row) {}

  std::vector<Polynomial> run() const {
    std::vector<Polynomial> out;
    for (const auto& item : row_.items) {
      switch (item.kind) {
        case TemplateItem::Kind::Sum: {
          Polynomial sum(ring_);
          for (const auto& atom : item.atoms) sum = sum + atom_poly(atom);
          out.push_back(std::move(sum));
          break;
        }
        case TemplateItem::Kind::All:
          for (const auto& p : cycle(item.source)) out.push_back(p);
          break;
        case TemplateItem::Kind::Range: {
          const auto& seq = cycle(item.source);
          for (int i = resolve(item.from, item.source); i <= resolve(item.to, item.source); ++i)
            out.push_back(at(seq, i));
          break;
        }
        case TemplateItem::Kind::Chain: {
          const int from = resolve(item.from, 'e');
          const int to = resolve(item.to, 'e');
          if (((to - from) % 3 + 3) % 3 != 0) fail("chain range length is not a multiple of 3");
          for (int c = from; c <= to; c += 3) {
            out.push_back(edge(c + 1));
            out.push_back(edge(c) + edge(c + 2));
          }
          break;
        }
      }
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::logic_error("case table line " + std::to_string(row_.line) + ": " + what);
  }

  const std::vector<Polynomial>& cycle(char source) const { return source == 'A' ? a_ : b_; }

  int path_length() const { return static_cast<int>(path_.size()) - 2; }

  int resolve(const TemplateIndex& idx, char source) const {
    switch (idx.base) {
      case TemplateIndex::Base::Zero: return idx.offset;
      case TemplateIndex::Base::Last: return static_cast<int>(cycle(source).size()) - 1 + idx.offset;
      case TemplateIndex::Base::PathLength:
        if (path_.empty()) fail("k used without a path");
        return path_length() + idx.offset;
    }
    return 0;
  }

  const Polynomial& at(const std::vector<Polynomial>& seq, int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= seq.size()) fail("sequence index " + std::to_string(i) + " out of range");
    return seq[static_cast<std::size_t>(i)];
  }

  Polynomial edge(int i) const {
    if (path_.empty() || i < 0 || i > path_length()) fail("path edge " + std::to_string(i) + " out of range");
    return edge_poly(ring_, path_[static_cast<std::size_t>(i)], path_[static_cast<std::size_t>(i) + 1]);
  }

  Polynomial atom_poly(const TemplateAtom& atom) const {
    if (atom.source == 'e') return edge(resolve(atom.index, 'e'));
    return at(cycle(atom.source), resolve(atom.index, atom.source));
  }

  RingPtr ring_;
  std::vector<Polynomial> a_;
  std::vector<Polynomial> b_;
  std::vector<std::size_t> path_;
  const CaseRow& row_;
};

std::string case_label(const CaseMatch& match) {
  return match.row->tag + (match.exchanged ? " (cycles exchanged)" : "");
}

}  // namespace

std::vector<Polynomial> cycle_polys(const RingPtr& ring, std::span<const std::size_t> vars) {
  const int n = static_cast<int>(vars.size());
  if (n < 3) throw PreconditionError("cycle sequences need at least 3 vertices");
  auto x = [&](int i) { return vars[static_cast<std::size_t>(i - 1)]; };
  auto e = [&](int i, int j) { return edge_poly(ring, x(i), x(j)); };
  const int m = n / 3;
  std::vector<Polynomial> q;
  if (n % 3 == 2) {
    q.push_back(e(1, 2));
    q.push_back(e(2, 3) + e(4, 5));
    for (int i = 1; i <= m - 1; ++i) {
      q.push_back(e(3 * i, 3 * i + 1) + e(3 * i + 2, 3 * i + 3));
      q.push_back(e(3 * i + 2, 3 * i + 3) + e(3 * i + 4, 3 * i + 5));
    }
    q.push_back(e(1, n) + e(3 * m, 3 * m + 1));
    return q;
  }
  q.push_back(e(1, 2));
  q.push_back(e(1, n) + e(2, 3));
  for (int i = 1; i <= m - 1; ++i) {
    q.push_back(e(3 * i + 1, 3 * i + 2));
    q.push_back(e(3 * i, 3 * i + 1) + e(3 * i + 2, 3 * i + 3));
  }
  if (n % 3 == 1) q.push_back(e(3 * m, 3 * m + 1));
  return q;
}

GeneratorSequence cycle_sequence(int n, const PrimeField& field) {
  auto formula = pd_cycle(n);
  GeneratorSequence seq;
  seq.spec = {CycleSpec{n}};
  seq.graph = build(seq.spec);
  seq.case_tag = formula.case_tag;
  seq.claimed_length = static_cast<std::size_t>(formula.value);
  auto vars = iota_vars(0, static_cast<std::size_t>(n));
  seq.polys = cycle_polys(graph_ring(seq.graph, field), vars);
  check_length(seq, formula.value);
  return seq;
}

GeneratorSequence bicyclic_vertex_sequence(int m, int n, const PrimeField& field) {
  auto formula = pd_bicyclic_vertex(m, n);
  GeneratorSequence seq;
  seq.spec = {BicyclicSpec{m, n}};
  seq.graph = build(seq.spec);
  auto ring = graph_ring(seq.graph, field);
  // x1..xm are variables 0..m-1, y2..yn follow; y1 is x1
  auto xs = iota_vars(0, static_cast<std::size_t>(m));
  std::vector<std::size_t> ys{0};
  for (auto v : iota_vars(static_cast<std::size_t>(m), static_cast<std::size_t>(n - 1))) ys.push_back(v);

  auto match = find_case(case_table(), TableFamily::Bicyclic, m, 0, n);
  const auto& a = match.exchanged ? ys : xs;
  const auto& b = match.exchanged ? xs : ys;
  seq.case_tag = case_label(match);
  seq.claimed_length = static_cast<std::size_t>(formula.value);
  seq.polys = TemplateEvaluator(ring, a, b, {}, *match.row).run();
  check_length(seq, formula.value);
  return seq;
}

GeneratorSequence dumbbell_sequence(int m, int k, int n, const PrimeField& field) {
  auto formula = pd_dumbbell(m, k, n);
  GeneratorSequence seq;
  seq.spec = {DumbbellSpec{m, k, n}};
  seq.graph = build(seq.spec);
  auto ring = graph_ring(seq.graph, field);
  // x-block, y-block, z-block
  const auto um = static_cast<std::size_t>(m);
  const auto un = static_cast<std::size_t>(n);
  auto xs = iota_vars(0, um);
  auto ys = iota_vars(um, un);
  std::vector<std::size_t> path{xs.front()};
  for (auto v : iota_vars(um + un, static_cast<std::size_t>(k))) path.push_back(v);
  path.push_back(ys.front());

  auto match = find_case(case_table(), TableFamily::Dumbbell, m, k, n);
  if (match.exchanged) std::reverse(path.begin(), path.end());
  const auto& a = match.exchanged ? ys : xs;
  const auto& b = match.exchanged ? xs : ys;
  seq.case_tag = case_label(match);
  seq.claimed_length = static_cast<std::size_t>(formula.value);
  seq.polys = TemplateEvaluator(ring, a, b, std::move(path), *match.row).run();
  check_length(seq, formula.value);
  return seq;
}

GeneratorSequence generator_sequence(const FamilySpec& spec, const PrimeField& field) {
  spec.validate();
  if (auto c = std::get_if<CycleSpec>(&spec.kind)) return cycle_sequence(c->n, field);
  if (auto b = std::get_if<BicyclicSpec>(&spec.kind)) return bicyclic_vertex_sequence(b->m, b->n, field);
  if (auto d = std::get_if<DumbbellSpec>(&spec.kind)) return dumbbell_sequence(d->m, d->k, d->n, field);
  throw DomainError("no generator sequence for " + spec.to_string());
}

}  // namespace edgeideal
