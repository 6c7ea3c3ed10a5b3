#include "edgeideal/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "edgeideal/betti.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/family.hpp"
#include "edgeideal/formulas.hpp"
#include "edgeideal/json_io.hpp"
#include "edgeideal/sequences.hpp"
#include "edgeideal/verify.hpp"

namespace edgeideal::cli {

namespace {

struct Common {
  std::string graph;
  std::string fields = "2,32003";
  std::string format = "json";
  std::size_t spair_budget = 0;  // 0: environment or default
  unsigned jobs = 1;
};

struct MatrixOptions {
  std::string families = "cycle,bicyclic,dumbbell";
  int max_vertices = 11;
  int max_cycle = 5;
  int max_k = 3;
  bool timing = false;
};

std::vector<PrimeField> parse_fields(const std::string& text) {
  std::vector<PrimeField> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), p);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw ParseError("bad field modulus '" + piece + "'");
    out.emplace_back(p);
  }
  if (out.empty()) throw ParseError("empty field list");
  return out;
}

std::size_t budget_from_env() {
  const char* env = std::getenv("EDGEIDEAL_SPAIR_BUDGET");
  if (!env || !*env) return kDefaultPairBudget;
  std::string_view text(env);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0)
    throw ParseError("EDGEIDEAL_SPAIR_BUDGET must be a positive integer");
  return v;
}

VerifyOptions verify_options(const Common& c) {
  VerifyOptions o;
  o.limits.pair_budget = c.spair_budget != 0 ? c.spair_budget : budget_from_env();
  o.threads = c.jobs;
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string join_fields(const std::vector<std::uint32_t>& fields) {
  std::string s;
  for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? ";" : "") + std::to_string(fields[i]);
  return s;
}

// --- pd --------------------------------------------------------------------

void cmd_pd(const Common& c, std::ostream& out) {
  auto spec = parse_family_spec(c.graph);
  auto field = parse_fields(c.fields).front();
  Graph g = build(spec);
  if (g.edge_count() == 0) throw DomainError("projective dimension of an edgeless graph's ideal");
  auto formula = pd_formula(spec);
  std::optional<int> homology;
  if (g.vertex_count() <= kMaxBettiVertices) homology = betti_table(g, field, c.jobs).max_index();

  if (c.format == "json") {
    Json j = {{"pd_formula", formula ? Json(formula->value) : Json(nullptr)},
              {"case", formula ? Json(formula->case_tag) : Json(nullptr)},
              {"pd_homology", optional_json(homology)}};
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << "graph,pd_formula,case,pd_homology\n"
        << csv_field(spec.to_string()) << ',' << (formula ? std::to_string(formula->value) : "") << ','
        << csv_field(formula ? formula->case_tag : "") << ',' << optional_int(homology) << '\n';
  } else {
    out << "graph        " << spec.to_string() << '\n';
    out << "pd formula   " << (formula ? std::to_string(formula->value) + " (" + formula->case_tag + ")" : "none")
        << '\n';
    out << "pd homology  " << (homology ? std::to_string(*homology) + " over " + field.to_string() : "skipped")
        << '\n';
  }
}

// --- betti -----------------------------------------------------------------

void cmd_betti(const Common& c, std::ostream& out) {
  auto spec = parse_family_spec(c.graph);
  auto field = parse_fields(c.fields).front();
  Graph g = build(spec);
  auto table = betti_table(g, field, c.jobs);
  if (c.format == "json") {
    Json j = {{"graph", spec.to_string()},
              {"field", field.modulus()},
              {"betti", to_json(table)},
              {"pd", table.max_index()}};
    out << j.dump() << '\n';
  } else if (c.format == "csv") {
    out << table.to_csv();
  } else {
    out << "Betti numbers of " << spec.to_string() << " over " << field.to_string() << '\n';
    out << std::setw(4) << "i" << std::setw(5) << "d" << std::setw(8) << "dim" << '\n';
    for (const auto& [key, dim] : table.entries())
      out << std::setw(4) << key.first << std::setw(5) << key.second << std::setw(8) << dim << '\n';
    out << "pd = " << table.max_index() << '\n';
  }
}

// --- sequence --------------------------------------------------------------

void cmd_sequence(const Common& c, std::ostream& out) {
  auto spec = parse_family_spec(c.graph);
  auto seq = generator_sequence(spec, parse_fields(c.fields).front());
  if (c.format == "json") {
    out << to_json(seq).dump() << '\n';
  } else if (c.format == "csv") {
    out << "index,polynomial\n";
    for (std::size_t i = 0; i < seq.polys.size(); ++i) out << i << ',' << csv_field(seq.polys[i].to_string()) << '\n';
  } else {
    out << spec.to_string() << "  [" << seq.case_tag << "]  length " << seq.claimed_length << '\n';
    for (std::size_t i = 0; i < seq.polys.size(); ++i) out << "  q" << i << " = " << seq.polys[i].to_string() << '\n';
  }
}

// --- verify ----------------------------------------------------------------

std::string pd_homology_text(const VerificationReport& r) {
  return r.pd_homology ? std::to_string(*r.pd_homology) : "skipped (formula-only)";
}

int cmd_verify(const Common& c, bool timing, std::ostream& out) {
  auto spec = parse_family_spec(c.graph);
  auto report = certify(spec, parse_fields(c.fields), verify_options(c));
  if (c.format == "json") {
    out << to_json(report, timing).dump() << '\n';
  } else if (c.format == "csv") {
    out << "edge,ok\n";
    for (const auto& e : report.reverse) out << e.edge << ',' << (e.ok ? "true" : "false") << '\n';
  } else {
    out << report.graph << "  [" << report.case_tag << "]\n";
    out << "  fields       " << join_fields(report.fields) << '\n';
    out << "  forward      " << std::count(report.forward.begin(), report.forward.end(), true) << '/'
        << report.forward.size() << " polynomials inside I(G)\n";
    out << "  reverse      "
        << std::count_if(report.reverse.begin(), report.reverse.end(), [](const EdgeCheck& e) { return e.ok; })
        << '/' << report.reverse.size() << " edges in the radical\n";
    for (const auto& e : report.reverse)
      if (!e.ok) out << "    not certified: " << e.edge << '\n';
    out << "  length       " << report.length << '\n';
    out << "  pd formula   " << report.pd_formula << '\n';
    out << "  pd homology  " << pd_homology_text(report) << '\n';
    out << "  verdict      " << (report.pass ? "pass" : "fail") << '\n';
  }
  return report.pass ? kExitOk : kExitVerificationFailed;
}

// --- stci ------------------------------------------------------------------

void cmd_stci(const Common& c, std::ostream& out) {
  auto spec = parse_family_spec(c.graph);
  auto cycle = std::get_if<CycleSpec>(&spec.kind);
  if (!cycle) throw DomainError("stci is defined for cycles only");
  const bool stci = is_stci_cycle(cycle->n);
  const auto height = min_vertex_cover_size(build(spec));
  const int ara = pd_cycle(cycle->n).value;
  if (c.format == "json") {
    out << Json{{"stci", stci}, {"height", height}, {"ara", ara}}.dump() << '\n';
  } else if (c.format == "csv") {
    out << "graph,stci,height,ara\n" << spec.to_string() << ',' << (stci ? "true" : "false") << ',' << height << ','
        << ara << '\n';
  } else {
    out << spec.to_string() << ": height " << height << ", ara " << ara << ", "
        << (stci ? "set-theoretic complete intersection" : "not a set-theoretic complete intersection") << '\n';
  }
}

// --- matrix ----------------------------------------------------------------

std::vector<FamilySpec> matrix_instances(const MatrixOptions& m) {
  std::vector<FamilySpec> out;
  std::stringstream in(m.families);
  std::string family;
  while (std::getline(in, family, ',')) {
    if (family == "cycle") {
      for (int n = 3; n <= m.max_vertices; ++n) out.push_back({CycleSpec{n}});
    } else if (family == "bicyclic") {
      for (int a = 3; a <= m.max_cycle; ++a)
        for (int b = 3; b <= m.max_cycle; ++b)
          if (a + b - 1 <= m.max_vertices) out.push_back({BicyclicSpec{a, b}});
    } else if (family == "dumbbell") {
      for (int a = 3; a <= m.max_cycle; ++a)
        for (int k = 0; k <= m.max_k; ++k)
          for (int b = 3; b <= m.max_cycle; ++b)
            if (a + b + k <= m.max_vertices) out.push_back({DumbbellSpec{a, k, b}});
    } else {
      throw ParseError("matrix family must be cycle, bicyclic or dumbbell, got '" + family + "'");
    }
  }
  return out;
}

struct MatrixRow {
  std::optional<VerificationReport> report;
  std::string error;
  int exit_code = kExitOk;
};

int cmd_matrix(const Common& c, const MatrixOptions& m, std::ostream& out) {
  const auto instances = matrix_instances(m);
  const auto fields = parse_fields(c.fields);
  const auto options = verify_options(Common{c.graph, c.fields, c.format, c.spair_budget, 1});

  std::vector<MatrixRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        rows[i].report = certify(instances[i], fields, options);
        if (!rows[i].report->pass) rows[i].exit_code = kExitVerificationFailed;
      } catch (const ResourceLimitError& e) {
        rows[i].error = e.what();
        rows[i].exit_code = kExitResourceLimit;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::max(1u, c.jobs); ++w) pool.emplace_back(work);
  }

  if (c.format == "csv")
    out << "graph,case,vertices,edges,length,pd_formula,pd_homology,fields,verdict,spairs\n";
  if (c.format == "text")
    out << std::left << std::setw(18) << "graph" << std::setw(8) << "length" << std::setw(8) << "pd" << std::setw(10)
        << "homology" << "verdict\n";
  int status = kExitOk;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& row = rows[i];
    status = std::max(status, row.exit_code);
    const std::string name = instances[i].to_string();
    if (!row.report) {
      if (c.format == "json")
        out << Json{{"graph", name}, {"verdict", "error"}, {"error", row.error}}.dump() << '\n';
      else if (c.format == "csv")
        out << csv_field(name) << ",,,,,,,," << "error,\n";
      else
        out << std::left << std::setw(18) << name << "error: " << row.error << '\n';
      continue;
    }
    const auto& r = *row.report;
    GroebnerStats total;
    for (const auto& run : r.per_field) total += run.stats;
    const Graph g = build(instances[i]);
    if (c.format == "json") {
      Json j = to_json(r, m.timing);
      out << j.dump() << '\n';
    } else if (c.format == "csv") {
      out << csv_field(name) << ',' << csv_field(r.case_tag) << ',' << g.vertex_count() << ',' << g.edge_count()
          << ',' << r.length << ',' << r.pd_formula << ',' << optional_int(r.pd_homology) << ','
          << join_fields(r.fields) << ',' << (r.pass ? "pass" : "fail") << ',' << total.pairs_processed << '\n';
    } else {
      out << std::left << std::setw(18) << name << std::setw(8) << r.length << std::setw(8) << r.pd_formula
          << std::setw(10) << (r.pd_homology ? std::to_string(*r.pd_homology) : "-") << (r.pass ? "pass" : "fail")
          << '\n';
    }
  }
  return status;
}

void add_common(CLI::App& sub, Common& c, bool needs_graph, const std::string& default_format_doc) {
  auto* graph = sub.add_option("--graph,-g", c.graph, "graph spec, e.g. cycle:7, bicyclic:4,5, dumbbell:3,1,4");
  if (needs_graph) graph->required();
  sub.add_option("--fields,-f", c.fields, "comma-separated prime moduli")->capture_default_str();
  sub.add_option("--format", c.format, "output format (" + default_format_doc + ")")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub.add_option("--spair-budget", c.spair_budget,
                 "S-pair budget per Groebner run (default: $EDGEIDEAL_SPAIR_BUDGET or 200000)")
      ->check(CLI::PositiveNumber);
  sub.add_option("--jobs,-j", c.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projective dimension, arithmetical rank and radical certificates for edge ideals of cycles and "
               "bicyclic graphs"};
  app.name("edgeideal");
  app.require_subcommand(1);

  Common c;
  MatrixOptions m;
  bool timing = true;
  auto* pd = app.add_subcommand("pd", "projective dimension: closed formula and homology");
  add_common(*pd, c, true, "json, csv, text");
  auto* betti = app.add_subcommand("betti", "graded Betti table");
  add_common(*betti, c, true, "json, csv, text");
  auto* sequence = app.add_subcommand("sequence", "radical-generating sequence");
  add_common(*sequence, c, true, "json, csv, text");
  auto* verify = app.add_subcommand("verify", "certify the sequence and compare lengths with pd");
  add_common(*verify, c, true, "json, csv, text");
  verify->add_flag("!--no-timing", timing, "omit wall-clock fields");
  auto* stci = app.add_subcommand("stci", "set-theoretic complete intersection test for a cycle");
  add_common(*stci, c, true, "json, csv, text");
  auto* matrix = app.add_subcommand("matrix", "certify every instance in a parameter range");
  add_common(*matrix, c, false, "json, csv, text");
  matrix->add_option("--families", m.families, "comma-separated subset of cycle,bicyclic,dumbbell")
      ->capture_default_str();
  matrix->add_option("--max-vertices", m.max_vertices, "largest vertex count")->capture_default_str();
  matrix->add_option("--max-cycle", m.max_cycle, "largest cycle length in two-cycle families")
      ->capture_default_str();
  matrix->add_option("--max-k", m.max_k, "largest dumbbell path length")->capture_default_str();
  matrix->add_flag("--timing", m.timing, "include wall-clock fields");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kExitOk;
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*pd) cmd_pd(c, out);
    else if (*betti) cmd_betti(c, out);
    else if (*sequence) cmd_sequence(c, out);
    else if (*verify) return cmd_verify(c, timing, out);
    else if (*stci) cmd_stci(c, out);
    else if (*matrix) return cmd_matrix(c, m, out);
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace edgeideal::cli
