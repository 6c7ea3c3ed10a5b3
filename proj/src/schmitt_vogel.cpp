#include "edgeideal/schmitt_vogel.hpp"

#include <algorithm>
#include <set>

#include "edgeideal/errors.hpp"
#include "edgeideal/family.hpp"

namespace edgeideal {

namespace {

Monomial power(const Monomial& m, unsigned e) {
  Monomial out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.set(i, m[i] * e);
  return out;
}

}  // namespace

SvCheck sv_check(const SvPartition& p) {
  SvCheck result;
  auto fail = [&](std::string what) {
    result.ok = false;
    result.violations.push_back(std::move(what));
  };
  auto show = [&](const Monomial& m) { return m.to_string(p.names); };

  if (p.parts.empty()) {
    fail("(ii) the partition has no parts");
    return result;
  }
  if (p.parts[0].size() != 1) fail("(ii) P_0 has " + std::to_string(p.parts[0].size()) + " elements");

  const std::set<Monomial> target(p.target.begin(), p.target.end());
  std::set<Monomial> seen;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (const auto& m : p.parts[i]) {
      if (!seen.insert(m).second) fail("(i) " + show(m) + " occurs in more than one place");
      if (!target.contains(m)) fail("(i) " + show(m) + " in P_" + std::to_string(i) + " is not a target monomial");
    }
  }
  for (const auto& m : target)
    if (!seen.contains(m)) fail("(i) target monomial " + show(m) + " is in no part");

  for (const auto& [m, e] : p.exponents)
    if (e == 0) fail("exponent of " + show(m) + " is zero");

  std::vector<Monomial> earlier;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    if (i > 0) {
      for (std::size_t a = 0; a < part.size(); ++a) {
        for (std::size_t b = a + 1; b < part.size(); ++b) {
          if (part[a].size() != part[b].size()) {
            fail("(iii) monomials of P_" + std::to_string(i) + " live in different rings");
            continue;
          }
          Monomial prod = part[a] * part[b];
          bool covered = std::any_of(earlier.begin(), earlier.end(), [&](const Monomial& q) {
            return q.size() == prod.size() && q.divides(prod);
          });
          if (!covered)
            fail("(iii) no element before P_" + std::to_string(i) + " divides " + show(part[a]) + "*" +
                 show(part[b]));
        }
      }
    }
    earlier.insert(earlier.end(), part.begin(), part.end());
  }
  return result;
}

std::vector<Polynomial> sv_sums(const SvPartition& p, const RingPtr& ring) {
  if (auto check = sv_check(p); !check) {
    std::string what = "partition fails the Schmitt-Vogel conditions:";
    for (const auto& v : check.violations) what += "\n  " + v;
    throw PreconditionError(what);
  }
  std::vector<Polynomial> out;
  out.reserve(p.parts.size());
  for (const auto& part : p.parts) {
    std::vector<Term> terms;
    for (const auto& m : part) {
      auto it = p.exponents.find(m);
      terms.push_back({1, power(m, it == p.exponents.end() ? 1 : it->second)});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

SvPartition cycle_sv_partition(int n) {
  if (n < 3 || n % 3 == 2) throw PreconditionError("cycle partitions exist here for n >= 3 with n ≡ 0, 1 (mod 3)");
  Graph g = build({CycleSpec{n}});
  const auto nv = static_cast<std::size_t>(n);
  auto edge = [&](int a, int b) {
    return Monomial::product_of(nv, {static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)});
  };
  const int m = n / 3;
  SvPartition p;
  p.target = edge_ideal(g);
  p.names = g.labels();
  std::vector<std::vector<Monomial>> binomials;
  p.parts.push_back({edge(1, 2)});
  binomials.push_back({edge(1, n), edge(2, 3)});
  for (int i = 1; i <= m - 1; ++i) {
    p.parts.push_back({edge(3 * i + 1, 3 * i + 2)});
    binomials.push_back({edge(3 * i, 3 * i + 1), edge(3 * i + 2, 3 * i + 3)});
  }
  if (n % 3 == 1) p.parts.push_back({edge(3 * m, 3 * m + 1)});
  p.parts.insert(p.parts.end(), binomials.begin(), binomials.end());
  return p;
}

}  // namespace edgeideal
