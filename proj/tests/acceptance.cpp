// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/family.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/schmitt_vogel.hpp"
#include "edgeideal/sequences.hpp"
#include "edgeideal/verify.hpp"

using namespace edgeideal;

namespace {

const std::vector<PrimeField> kAllFields{PrimeField(2), PrimeField(3), PrimeField(32003)};
const std::vector<PrimeField> kCertFields{PrimeField(2), PrimeField(32003)};

/// Collects the reasons a criterion fails; empty means pass.
class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

using Criterion = std::function<void(Findings&)>;

bool all_true(const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); }

bool some_reverse_bit_false(const VerificationReport& r) {
  return std::any_of(r.reverse.begin(), r.reverse.end(), [](const EdgeCheck& e) { return !e.ok; });
}

void cycle_sweep(Findings& f) {
  const int expected[] = {2, 3, 3, 4, 5, 5, 6, 7, 7, 8};
  for (int n = 3; n <= 12; ++n) {
    Graph g = build({CycleSpec{n}});
    f.expect(pd_cycle(n).value == expected[n - 3], "pd_cycle(" + std::to_string(n) + ")");
    for (const auto& field : kAllFields)
      f.expect(projective_dimension(g, field) == expected[n - 3],
               "pd of C_" + std::to_string(n) + " over " + field.to_string());
  }
}

void betti_spots(Findings& f) {
  f.expect(betti_table(build({CycleSpec{3}}), PrimeField(32003)).at(2, 3) == 2, "beta_{2,3}(C_3)");
  f.expect(betti_table(build({CycleSpec{5}}), PrimeField(32003)).at(3, 5) == 1, "beta_{3,5}(C_5)");
}

void line_sweep(Findings& f) {
  for (int n = 2; n <= 10; ++n) {
    Graph g = build({LineSpec{n}});
    for (const auto& field : kAllFields)
      f.expect(projective_dimension(g, field) == pd_line(n).value,
               "pd of L_" + std::to_string(n) + " over " + field.to_string());
  }
}

void expect_certified(Findings& f, const FamilySpec& spec) {
  const auto report = certify(spec, kCertFields);
  const auto formula = pd_formula(spec);
  f.expect(report.pass, spec.to_string() + " certificate");
  f.expect(!report.formula_only() && report.pd_homology == formula->value, spec.to_string() + " homology pd");
  f.expect(static_cast<int>(report.length) == formula->value, spec.to_string() + " length");
  f.expect(all_true(report.forward), spec.to_string() + " forward inclusion");
  f.expect(!some_reverse_bit_false(report), spec.to_string() + " reverse inclusion");
}

void cycle_certification(Findings& f) {
  for (int n = 3; n <= 9; ++n) expect_certified(f, {CycleSpec{n}});
}

void bicyclic_certification(Findings& f) {
  for (int m = 3; m <= 11; ++m)
    for (int n = m; m + n - 1 <= 11; ++n) expect_certified(f, {BicyclicSpec{m, n}});
  f.expect(pd_bicyclic_vertex(3, 3).value == 4, "pd of bicyclic 3,3");
  auto seq = bicyclic_vertex_sequence(3, 3, PrimeField(32003));
  std::vector<std::string> rendered;
  for (const auto& p : seq.polys) rendered.push_back(p.to_string());
  const std::vector<std::string> explicit_sequence{"x1*x2", "x1*x3 + x2*x3", "x1*y2", "x1*y3 + y2*y3"};
  f.expect(rendered == explicit_sequence, "explicit sequence for bicyclic 3,3");
}

void dumbbell_certification(Findings& f) {
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n)
      for (int k = 0; k <= 3; ++k)
        if (m + n + k <= 11) expect_certified(f, {DumbbellSpec{m, k, n}});
  f.expect(pd_dumbbell(3, 0, 3).value == 4, "pd of dumbbell 3,0,3");
  f.expect(pd_dumbbell(5, 0, 5).value == 6, "pd of dumbbell 5,0,5");
}

void stci_predicate(Findings& f) {
  for (int n = 3; n <= 12; ++n) {
    const auto height = min_vertex_cover_size(build({CycleSpec{n}}));
    f.expect(height == static_cast<std::size_t>((n + 1) / 2), "height of C_" + std::to_string(n));
    f.expect(is_stci_cycle(n) == (n == 3 || n == 5), "stci for C_" + std::to_string(n));
  }
}

HomologyProfile eps(const std::string& spec) {
  return reduced_homology_dims(epsilon_complex(build(parse_family_spec(spec))), PrimeField(32003));
}

void shift_properties(Findings& f) {
  const auto edge = eps("line:2");
  f.expect(edge == HomologyProfile{{-1, 1}}, "eps of a single edge");
  f.expect(eps("union:cycle:4+line:2") == shifted(edge, (2 * 4 + 1) / 3), "C_4 with an edge");
  f.expect(eps("union:cycle:5+line:2") == shifted(edge, (2 * 5 - 1) / 3), "C_5 with an edge");
  f.expect(eps("union:line:4+line:2").empty(), "L_4 with an edge");
}

std::vector<FamilySpec> instances_up_to(std::size_t max_vertices) {
  std::vector<FamilySpec> out;
  for (int n = 3; n <= static_cast<int>(max_vertices); ++n) out.push_back({CycleSpec{n}});
  for (int m = 3; m <= static_cast<int>(max_vertices); ++m)
    for (int n = 3; n <= static_cast<int>(max_vertices); ++n) {
      if (static_cast<std::size_t>(m + n - 1) <= max_vertices) out.push_back({BicyclicSpec{m, n}});
      for (int k = 0; static_cast<std::size_t>(m + n + k) <= max_vertices; ++k) out.push_back({DumbbellSpec{m, k, n}});
    }
  return out;
}

void mutation_resistance(Findings& f) {
  VerifyOptions no_homology;
  no_homology.homology_vertex_limit = 0;
  for (const auto& spec : instances_up_to(9)) {
    const auto seq = generator_sequence(spec, PrimeField(32003));
    if (!certify_sequence(seq, kCertFields, no_homology).pass) {
      f.expect(false, spec.to_string() + " does not pass unmutated");
      continue;
    }
    for (std::size_t i = 0; i < seq.polys.size(); ++i) {
      auto mutant = seq;
      mutant.polys.erase(mutant.polys.begin() + static_cast<long>(i));
      const auto r = certify_sequence(mutant, kCertFields, no_homology);
      f.expect(!r.pass && some_reverse_bit_false(r), spec.to_string() + " without q" + std::to_string(i));
      if (seq.polys[i].size() < 2) continue;
      for (std::size_t t = 0; t < seq.polys[i].size(); ++t) {
        auto terms = seq.polys[i].terms();
        terms.erase(terms.begin() + static_cast<long>(t));
        mutant = seq;
        mutant.polys[i] = Polynomial(seq.polys[i].ring(), std::move(terms));
        const auto rt = certify_sequence(mutant, kCertFields, no_homology);
        f.expect(!rt.pass && some_reverse_bit_false(rt),
                 spec.to_string() + " q" + std::to_string(i) + " without term " + std::to_string(t));
      }
    }
  }
}

void sv_checker(Findings& f) {
  const std::vector<int> lengths{3, 4, 6, 7, 9, 10};
  for (int n : lengths) f.expect(sv_check(cycle_sv_partition(n)).ok, "partition for C_" + std::to_string(n));

  std::mt19937 rng(20260101);
  int rejected = 0, certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = lengths[rng() % lengths.size()];
    auto p = cycle_sv_partition(n);
    std::size_t from;
    do from = rng() % p.parts.size();
    while (p.parts[from].empty());
    std::size_t to;
    do to = rng() % (p.parts.size() + 1);
    while (to == from);
    if (to == p.parts.size()) p.parts.emplace_back();
    auto& source = p.parts[from];
    const auto moved = source.begin() + static_cast<long>(rng() % source.size());
    p.parts[to].push_back(*moved);
    source.erase(moved);

    if (!sv_check(p).ok) {
      ++rejected;
      continue;
    }
    const Graph g = build({CycleSpec{n}});
    bool ok = true;
    for (const auto& field : kCertFields) {
      auto sums = sv_sums(p, graph_ring(g, field));
      std::erase_if(sums, [](const Polynomial& q) { return q.is_zero(); });
      ok = ok && all_true(verify_reverse(sums, g, field));
    }
    ++certified;
    f.expect(ok, "mutation " + std::to_string(trial) + " of the C_" + std::to_string(n) +
                     " partition passes sv_check but not certification");
  }
  f.expect(rejected + certified == 200, "200 mutations examined");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"cycle pd sweep n=3..12 over GF(2), GF(3), GF(32003)", cycle_sweep},
      {"Betti spot values beta_{2,3}(C_3)=2, beta_{3,5}(C_5)=1", betti_spots},
      {"line pd sweep n=2..10 over three fields", line_sweep},
      {"cycle certification n=3..9", cycle_certification},
      {"bicyclic vertex-join certification", bicyclic_certification},
      {"dumbbell certification", dumbbell_certification},
      {"stci exactly for n=3,5", stci_predicate},
      {"disjoint-union shift properties", shift_properties},
      {"mutation resistance up to 9 variables", mutation_resistance},
      {"Schmitt-Vogel checker and 200 mutations", sv_checker},
  };

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Findings f;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && f.ok();
    std::printf("criterion %zu: %s  %s  (%zu checks, %.1f s)\n", i + 1, f.ok() ? "PASS" : "FAIL",
                criteria[i].first.c_str(), f.checks(), seconds);
    for (const auto& why : f.failures()) std::printf("    %s\n", why.c_str());
  }
  std::fflush(stdout);
  return all_pass ? 0 : 1;
}
