#include "edgeideal/complex.hpp"

#include <algorithm>
#include <bit>

#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > kMaxComplexVertices)
    throw ResourceLimitError("simplicial complexes are limited to " + std::to_string(kMaxComplexVertices) +
                             " vertices");
}

struct Entry {
  std::uint32_t row;
  Coeff value;
};
using Column = std::vector<Entry>;

// col - factor * other, both sorted by row
Column eliminate(const Column& col, const Column& other, Coeff factor, const PrimeField& field) {
  Column out;
  out.reserve(col.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() || (i < col.size() && col[i].row < other[j].row)) {
      out.push_back(col[i++]);
    } else if (i == col.size() || other[j].row < col[i].row) {
      out.push_back({other[j].row, field.neg(field.mul(factor, other[j].value))});
      ++j;
    } else {
      Coeff v = field.sub(col[i].value, field.mul(factor, other[j].value));
      if (v != 0) out.push_back({col[i].row, v});
      ++i;
      ++j;
    }
  }
  return out;
}

// Rank of the boundary map from faces of one size to faces one smaller.
std::size_t boundary_rank(const std::vector<FaceMask>& faces, const std::vector<FaceMask>& rows,
                          const PrimeField& field) {
  if (faces.empty() || rows.empty()) return 0;
  std::vector<Column> pivots;
  std::vector<int> owner(rows.size(), -1);
  std::size_t rank = 0;
  for (FaceMask face : faces) {
    Column col;
    int position = 0;
    for (FaceMask rest = face; rest != 0; rest &= rest - 1, ++position) {
      FaceMask bit = rest & (~rest + 1);
      auto it = std::lower_bound(rows.begin(), rows.end(), face & ~bit);
      col.push_back({static_cast<std::uint32_t>(it - rows.begin()), position % 2 == 0 ? Coeff{1} : field.neg(1)});
    }
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    while (!col.empty()) {
      int o = owner[col.back().row];
      if (o < 0) {
        owner[col.back().row] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(col));
        ++rank;
        break;
      }
      const Column& other = pivots[static_cast<std::size_t>(o)];
      Coeff factor = field.mul(col.back().value, field.inv(other.back().value));
      col = eliminate(col, other, factor, field);
    }
  }
  return rank;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {
  check_vertex_count(vertices_.size());
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<FaceMask> facets)
    : SimplicialComplex(std::move(vertices)) {
  const FaceMask all = vertices_.size() == 32 ? ~FaceMask{0} : (FaceMask{1} << vertices_.size()) - 1;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (FaceMask f : facets) {
    if (f & ~all) throw DomainError("facet uses a vertex outside the complex");
    bool dominated = std::any_of(facets.begin(), facets.end(),
                                 [f](FaceMask g) { return g != f && (f & ~g) == 0; });
    if (!dominated) facets_.push_back(f);
  }
}

bool SimplicialComplex::contains(FaceMask face) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [face](FaceMask f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dimension() const noexcept {
  int best = -2;
  for (FaceMask f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<FaceMask>> groups(static_cast<std::size_t>(dimension() + 2));
  if (is_void()) return groups;
  FaceMask span = 0;
  for (FaceMask f : facets_) span |= f;
  // walk the submasks of the vertex span in increasing order
  FaceMask sub = 0;
  do {
    if (contains(sub)) groups[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
    sub = (sub - span) & span;
  } while (sub != 0);
  return groups;
}

SimplicialComplex epsilon_complex(const Graph& h) {
  if (h.edge_count() == 0) throw DomainError("epsilon complex of an edgeless graph");
  check_vertex_count(h.vertex_count());
  const auto all = static_cast<FaceMask>(h.all_vertices());
  std::vector<FaceMask> facets;
  for (auto [u, v] : h.edges()) facets.push_back(all & ~((FaceMask{1} << u) | (FaceMask{1} << v)));
  return SimplicialComplex(h.labels(), std::move(facets));
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const PrimeField& field) {
  HomologyProfile out;
  auto groups = c.faces_by_size();
  if (groups.empty()) return out;
  // ranks[s] = rank of the boundary leaving faces of size s
  std::vector<std::size_t> ranks(groups.size() + 1, 0);
  for (std::size_t s = 1; s < groups.size(); ++s) ranks[s] = boundary_rank(groups[s], groups[s - 1], field);
  for (std::size_t s = 0; s < groups.size(); ++s) {
    std::size_t dim = groups[s].size() - ranks[s] - ranks[s + 1];
    if (dim > 0) out[static_cast<int>(s) - 1] = dim;
  }
  return out;
}

long reduced_euler_characteristic(const SimplicialComplex& c) {
  long chi = 0;
  auto groups = c.faces_by_size();
  for (std::size_t s = 0; s < groups.size(); ++s) {
    long f = static_cast<long>(groups[s].size());
    chi += (s % 2 == 1) ? f : -f;  // size s means dimension s-1
  }
  return chi;
}

HomologyProfile shifted(const HomologyProfile& h, int by) {
  HomologyProfile out;
  for (auto [i, d] : h) out[i + by] = d;
  return out;
}

}  // namespace edgeideal
