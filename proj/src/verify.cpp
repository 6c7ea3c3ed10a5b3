#include "edgeideal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "edgeideal/errors.hpp"
#include "edgeideal/formulas.hpp"

namespace edgeideal {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

bool FieldRun::ok() const {
  return std::all_of(reverse.begin(), reverse.end(), [](bool b) { return b; });
}

std::vector<bool> verify_forward(std::span<const Polynomial> polys, const Graph& g) {
  const auto edges = edge_ideal(g);
  std::vector<bool> out;
  out.reserve(polys.size());
  for (const auto& f : polys) {
    bool ok = std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) {
      return std::any_of(edges.begin(), edges.end(), [&](const Monomial& e) { return e.divides(t.mono); });
    });
    out.push_back(ok);
  }
  return out;
}

std::vector<bool> verify_reverse(std::span<const Polynomial> polys, const Graph& g, const PrimeField& field,
                                 const VerifyOptions& options, GroebnerStats* stats) {
  auto ring = graph_ring(g, field);
  std::vector<Polynomial> gens;
  gens.reserve(polys.size());
  for (const auto& f : polys) gens.push_back(f.mapped_to(ring));
  const auto edges = edge_ideal(g);

  std::vector<char> out(edges.size());  // one byte per slot so workers never share a word
  std::vector<GroebnerStats> edge_stats(edges.size());
  auto check = [&](std::size_t i) {
    try {
      out[i] = radical_membership(Polynomial::monomial(ring, edges[i]), gens, options.limits, &edge_stats[i]);
    } catch (const ResourceLimitError& e) {
      throw ResourceLimitError("edge " + g.edge_label(g.edges()[i]) + " over " + field.to_string() + ": " +
                               e.what());
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(edges.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < edges.size(); ++i) check(i);
  } else {
    std::exception_ptr failure;
    std::mutex failure_lock;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < edges.size(); i += workers) {
            try {
              check(i);
            } catch (...) {
              std::lock_guard lock(failure_lock);
              if (!failure) failure = std::current_exception();
              return;
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  if (stats)
    for (const auto& s : edge_stats) *stats += s;
  return {out.begin(), out.end()};
}

VerificationReport certify_sequence(const GeneratorSequence& seq, const std::vector<PrimeField>& fields,
                                    const VerifyOptions& options) {
  if (fields.empty()) throw PreconditionError("certification needs at least one field");
  const auto start = Clock::now();
  const Graph& g = seq.graph;

  VerificationReport r;
  r.graph = seq.spec.to_string();
  r.case_tag = seq.case_tag;
  r.length = seq.polys.size();
  auto formula = pd_formula(seq.spec);
  if (!formula) throw DomainError("no projective dimension formula for " + r.graph);
  r.pd_formula = formula->value;

  r.forward = verify_forward(seq.polys, g);
  for (const auto& e : g.edges()) r.reverse.push_back({g.edge_label(e), true});
  for (const auto& field : fields) {
    FieldRun run{field.modulus(), {}, {}, 0};
    const auto field_start = Clock::now();
    run.reverse = verify_reverse(seq.polys, g, field, options, &run.stats);
    run.seconds = seconds_since(field_start);
    for (std::size_t i = 0; i < run.reverse.size(); ++i) r.reverse[i].ok = r.reverse[i].ok && run.reverse[i];
    r.fields.push_back(field.modulus());
    r.per_field.push_back(std::move(run));
  }

  if (g.vertex_count() <= options.homology_vertex_limit) r.pd_homology = projective_dimension(g, fields.front());

  const bool forward_ok = std::all_of(r.forward.begin(), r.forward.end(), [](bool b) { return b; });
  const bool reverse_ok = std::all_of(r.reverse.begin(), r.reverse.end(), [](const EdgeCheck& c) { return c.ok; });
  const bool length_ok = r.length == static_cast<std::size_t>(r.pd_formula);
  const bool homology_ok = !r.pd_homology || *r.pd_homology == r.pd_formula;
  r.pass = forward_ok && reverse_ok && length_ok && homology_ok;
  r.seconds = seconds_since(start);
  return r;
}

VerificationReport certify(const FamilySpec& spec, const std::vector<PrimeField>& fields,
                           const VerifyOptions& options) {
  if (fields.empty()) throw PreconditionError("certification needs at least one field");
  return certify_sequence(generator_sequence(spec, fields.front()), fields, options);
}

}  // namespace edgeideal
