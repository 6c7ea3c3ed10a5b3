#include "edgeideal/json_io.hpp"

#include <cmath>

#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

Json stats_json(const GroebnerStats& s) {
  return {{"spairs", s.pairs_processed},
          {"spairs_reduced", s.pairs_reduced},
          {"coprime_skips", s.coprime_skips},
          {"peak_basis", s.peak_basis_size}};
}

double milliseconds(double seconds) { return std::round(seconds * 1e6) / 1e3; }

}  // namespace

Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back({{"c", t.coeff}, {"e", t.mono.exponents()}});
  return {{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("e").get<std::vector<unsigned>>();
      if (exps.size() != ring->nvars())
        throw ParseError("exponent vector has " + std::to_string(exps.size()) + " entries, ring has " +
                         std::to_string(ring->nvars()) + " variables");
      terms.push_back({ring->field().reduce(t.at("c").get<std::int64_t>()), Monomial(exps)});
    }
    return Polynomial(ring, std::move(terms));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

Json to_json(const GeneratorSequence& seq) {
  Json polys = Json::array();
  for (const auto& f : seq.polys) polys.push_back(to_json(f));
  return {{"graph", seq.spec.to_string()},
          {"case", seq.case_tag},
          {"length", seq.claimed_length},
          {"polys", std::move(polys)}};
}

Json to_json(const BettiTable& table) {
  Json out = Json::array();
  for (const auto& [key, dim] : table.entries()) out.push_back({{"i", key.first}, {"d", key.second}, {"dim", dim}});
  return out;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json reverse = Json::array();
  for (const auto& c : r.reverse) reverse.push_back({{"edge", c.edge}, {"ok", c.ok}});

  GroebnerStats total;
  Json per_field = Json::array();
  for (const auto& run : r.per_field) {
    total += run.stats;
    Json entry = {{"p", run.modulus}, {"ok", run.ok()}};
    Json failed = Json::array();
    for (std::size_t i = 0; i < run.reverse.size(); ++i)
      if (!run.reverse[i]) failed.push_back(r.reverse[i].edge);
    entry["failed_edges"] = std::move(failed);
    entry.update(stats_json(run.stats));
    if (with_timing) entry["wall_ms"] = milliseconds(run.seconds);
    per_field.push_back(std::move(entry));
  }
  Json stats = stats_json(total);
  stats["homology"] = r.formula_only() ? "formula-only" : "computed";
  stats["per_field"] = std::move(per_field);
  if (with_timing) stats["wall_ms"] = milliseconds(r.seconds);

  return {{"graph", r.graph},
          {"case", r.case_tag},
          {"fields", r.fields},
          {"forward", r.forward},
          {"reverse", std::move(reverse)},
          {"length", r.length},
          {"pd_formula", r.pd_formula},
          {"pd_homology", r.pd_homology ? Json(*r.pd_homology) : Json(nullptr)},
          {"verdict", r.pass ? "pass" : "fail"},
          {"stats", std::move(stats)}};
}

}  // namespace edgeideal
