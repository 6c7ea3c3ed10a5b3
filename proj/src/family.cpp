#include "edgeideal/family.hpp"

#include <charconv>

#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::vector<int> parse_ints(std::string_view text, std::string_view family) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
      throw ParseError("bad integer '" + std::string(piece) + "' in " + std::string(family) + " spec");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

FamilySpec parse_simple(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("graph spec '" + std::string(text) + "' lacks ':'");
  std::string_view name = text.substr(0, colon);
  std::string_view args = text.substr(colon + 1);
  auto expect = [&](std::size_t count) {
    auto v = parse_ints(args, name);
    if (v.size() != count)
      throw ParseError(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                       std::to_string(v.size()));
    return v;
  };
  if (name == "cycle") return {CycleSpec{expect(1)[0]}};
  if (name == "line") return {LineSpec{expect(1)[0]}};
  if (name == "bicyclic") {
    auto v = expect(2);
    return {BicyclicSpec{v[0], v[1]}};
  }
  if (name == "dumbbell") {
    auto v = expect(3);
    return {DumbbellSpec{v[0], v[1], v[2]}};
  }
  throw ParseError("unknown graph family '" + std::string(name) + "'");
}

std::vector<std::string> block(const std::string& letter, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(letter + std::to_string(i));
  return out;
}

using LabeledEdges = std::vector<std::pair<std::string, std::string>>;

void add_cycle(LabeledEdges& edges, const std::vector<std::string>& ring) {
  for (std::size_t i = 0; i + 1 < ring.size(); ++i) edges.emplace_back(ring[i], ring[i + 1]);
  edges.emplace_back(ring.front(), ring.back());
}

}  // namespace

void FamilySpec::validate() const {
  std::visit(overloaded{
                 [](const CycleSpec& c) { require(c.n >= 3, "cycle length must be at least 3"); },
                 [](const LineSpec& l) { require(l.n >= 1, "line length must be at least 1"); },
                 [](const BicyclicSpec& b) { require(b.m >= 3 && b.n >= 3, "bicyclic cycle lengths must be at least 3"); },
                 [](const DumbbellSpec& d) {
                   require(d.m >= 3 && d.n >= 3, "dumbbell cycle lengths must be at least 3");
                   require(d.k >= 0, "dumbbell path length must be non-negative");
                 },
                 [](const UnionSpec& u) {
                   require(u.parts.size() >= 2, "a union needs at least two operands");
                   for (const auto& p : u.parts) {
                     require(!std::holds_alternative<UnionSpec>(p.kind), "nested unions are not supported");
                     p.validate();
                   }
                 },
             },
             kind);
}

std::string FamilySpec::to_string() const {
  return std::visit(overloaded{
                        [](const CycleSpec& c) { return "cycle:" + std::to_string(c.n); },
                        [](const LineSpec& l) { return "line:" + std::to_string(l.n); },
                        [](const BicyclicSpec& b) {
                          return "bicyclic:" + std::to_string(b.m) + "," + std::to_string(b.n);
                        },
                        [](const DumbbellSpec& d) {
                          return "dumbbell:" + std::to_string(d.m) + "," + std::to_string(d.k) + "," +
                                 std::to_string(d.n);
                        },
                        [](const UnionSpec& u) {
                          std::string s = "union:";
                          for (std::size_t i = 0; i < u.parts.size(); ++i)
                            s += (i ? "+" : "") + u.parts[i].to_string();
                          return s;
                        },
                    },
                    kind);
}

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  constexpr std::string_view kUnion = "union:";
  if (text.substr(0, kUnion.size()) == kUnion) {
    UnionSpec u;
    std::string_view rest = text.substr(kUnion.size());
    std::size_t pos = 0;
    while (true) {
      std::size_t plus = rest.find('+', pos);
      auto piece = rest.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
      if (piece.substr(0, kUnion.size()) == kUnion) throw ParseError("nested unions are not supported");
      u.parts.push_back(parse_simple(piece));
      if (plus == std::string_view::npos) break;
      pos = plus + 1;
    }
    if (u.parts.size() < 2) throw ParseError("union needs operands joined by '+'");
    spec.kind = std::move(u);
  } else {
    spec = parse_simple(text);
  }
  spec.validate();
  return spec;
}

Graph build(const FamilySpec& spec) {
  spec.validate();
  return std::visit(
      overloaded{
          [](const CycleSpec& c) {
            auto xs = block("x", 1, c.n);
            LabeledEdges edges;
            add_cycle(edges, xs);
            return Graph::from_labeled_edges(xs, edges);
          },
          [](const LineSpec& l) {
            auto xs = block("x", 1, l.n);
            LabeledEdges edges;
            for (int i = 0; i + 1 < l.n; ++i) edges.emplace_back(xs[i], xs[i + 1]);
            return Graph::from_labeled_edges(xs, edges);
          },
          [](const BicyclicSpec& b) {
            auto xs = block("x", 1, b.m);
            auto ys = block("y", 2, b.n);
            LabeledEdges edges;
            add_cycle(edges, xs);
            std::vector<std::string> ycycle{"x1"};
            ycycle.insert(ycycle.end(), ys.begin(), ys.end());
            add_cycle(edges, ycycle);
            auto labels = xs;
            labels.insert(labels.end(), ys.begin(), ys.end());
            return Graph::from_labeled_edges(labels, edges);
          },
          [](const DumbbellSpec& d) {
            auto xs = block("x", 1, d.m);
            auto ys = block("y", 1, d.n);
            auto zs = block("z", 1, d.k);
            LabeledEdges edges;
            add_cycle(edges, xs);
            add_cycle(edges, ys);
            std::vector<std::string> path{"x1"};
            path.insert(path.end(), zs.begin(), zs.end());
            path.push_back("y1");
            for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
            auto labels = xs;
            labels.insert(labels.end(), ys.begin(), ys.end());
            labels.insert(labels.end(), zs.begin(), zs.end());
            return Graph::from_labeled_edges(labels, edges);
          },
          [](const UnionSpec& u) {
            std::vector<std::string> labels;
            std::vector<Graph::Edge> edges;
            for (std::size_t part = 0; part < u.parts.size(); ++part) {
              Graph g = build(u.parts[part]);
              std::size_t offset = labels.size();
              for (const auto& l : g.labels()) labels.push_back(l + std::string(part, '\''));
              for (auto [a, b] : g.edges()) edges.emplace_back(a + offset, b + offset);
            }
            return Graph(std::move(labels), std::move(edges));
          },
      },
      spec.kind);
}

}  // namespace edgeideal
