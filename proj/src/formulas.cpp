#include "edgeideal/formulas.hpp"

#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

std::string residue_tag(const char* name, int r) { return std::string(name) + "≡" + std::to_string(r); }

}  // namespace

FormulaResult pd_cycle(int n) {
  if (n < 3) throw PreconditionError("pd_cycle needs n >= 3");
  switch (n % 3) {
    case 0: return {2 * n / 3, residue_tag("n", 0)};
    case 1: return {(2 * n + 1) / 3, residue_tag("n", 1)};
    default: return {(2 * n - 1) / 3, residue_tag("n", 2)};
  }
}

FormulaResult pd_line(int n) {
  if (n < 2) throw PreconditionError("pd_line needs n >= 2");
  switch (n % 3) {
    case 0: return {2 * n / 3, residue_tag("n", 0)};
    case 1: return {(2 * n - 2) / 3, residue_tag("n", 1)};
    default: return {(2 * n - 1) / 3, residue_tag("n", 2)};
  }
}

FormulaResult pd_bicyclic_vertex(int m, int n) {
  if (m < 3 || n < 3) throw PreconditionError("pd_bicyclic_vertex needs m, n >= 3");
  const int v = m + n - 1;
  switch (v % 3) {
    case 1: return {(2 * v + 1) / 3, "|V|≡1"};
    case 0: return {2 * v / 3, "|V|≡0"};
    default:
      if (m % 3 == 0 || n % 3 == 0) return {(2 * v + 2) / 3, "|V|≡2, a cycle length ≡0"};
      return {(2 * v - 1) / 3, "|V|≡2, no cycle length ≡0"};
  }
}

FormulaResult pd_dumbbell(int m, int k, int n) {
  if (m < 3 || n < 3 || k < 0) throw PreconditionError("pd_dumbbell needs m, n >= 3 and k >= 0");
  const int v = m + n + k;
  const bool low_m = m % 3 != 2;
  const bool low_n = n % 3 != 2;
  switch (v % 3) {
    case 1:
      if (!low_m && !low_n) return {(2 * v - 2) / 3, "|V|≡1, m≡2 and n≡2"};
      return {(2 * v + 1) / 3, "|V|≡1, otherwise"};
    case 0: return {2 * v / 3, "|V|≡0"};
    default:
      if (low_m && low_n) return {(2 * v + 2) / 3, "|V|≡2, m,n ≡0 or 1"};
      return {(2 * v - 1) / 3, "|V|≡2, otherwise"};
  }
}

bool is_stci_cycle(int n) { return pd_cycle(n).value == (n + 1) / 2; }

std::optional<FormulaResult> pd_formula(const FamilySpec& spec) {
  spec.validate();
  if (auto c = std::get_if<CycleSpec>(&spec.kind)) return pd_cycle(c->n);
  if (auto l = std::get_if<LineSpec>(&spec.kind)) {
    if (l->n < 2) return std::nullopt;
    return pd_line(l->n);
  }
  if (auto b = std::get_if<BicyclicSpec>(&spec.kind)) return pd_bicyclic_vertex(b->m, b->n);
  if (auto d = std::get_if<DumbbellSpec>(&spec.kind)) return pd_dumbbell(d->m, d->k, d->n);
  return std::nullopt;
}

}  // namespace edgeideal
