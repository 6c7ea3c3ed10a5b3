// Shared helpers for the test suites: a small polynomial reader and
// oracles that recompute results by deliberately naive means.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/polynomial.hpp"

namespace testing {

using namespace edgeideal;

inline std::vector<std::string> names(std::size_t n, const std::string& letter = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(letter + std::to_string(i));
  return out;
}

inline RingPtr ring(std::uint32_t p, std::size_t nvars) { return PolyRing::make(PrimeField(p), names(nvars)); }

/// Reads "3*x1^2*x2 - x3 + 5" in the ring's variable names.
inline Polynomial parse(const RingPtr& r, const std::string& text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&] {
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
    return v;
  };
  skip();
  if (text.substr(pos) == "0") return Polynomial(r);
  while (pos < text.size()) {
    std::int64_t sign = 1;
    skip();
    if (text[pos] == '+' || text[pos] == '-') sign = text[pos++] == '-' ? -1 : 1;
    skip();
    std::int64_t coeff = 1;
    Monomial m(r->nvars());
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= number();
      } else {
        std::size_t end = pos;
        while (end < text.size() && std::isalnum(static_cast<unsigned char>(text[end]))) ++end;
        std::string name = text.substr(pos, end - pos);
        pos = end;
        auto it = std::find(r->names().begin(), r->names().end(), name);
        if (it == r->names().end()) throw ParseError("unknown variable " + name);
        unsigned e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = static_cast<unsigned>(number());
        }
        auto idx = static_cast<std::size_t>(it - r->names().begin());
        m.set(idx, m[idx] + e);
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    terms.push_back({r->field().reduce(sign * coeff), m});
    skip();
  }
  return Polynomial(r, std::move(terms));
}

inline Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int max_terms = 4, unsigned max_exp = 2) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> coeff(0, r->field().modulus() - 1);
  std::vector<Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(r->nvars());
    for (std::size_t i = 0; i < r->nvars(); ++i) m.set(i, exp(rng));
    terms.push_back({coeff(rng), m});
  }
  return Polynomial(r, std::move(terms));
}

// --- naive polynomial oracle ----------------------------------------------

/// Dense dictionary from exponent vector to integer coefficient mod p.
using NaivePoly = std::map<std::vector<unsigned>, std::int64_t>;

inline NaivePoly naive(const Polynomial& f) {
  NaivePoly out;
  for (const auto& t : f.terms()) out[t.mono.exponents()] = t.coeff;
  return out;
}

inline NaivePoly naive_product(const NaivePoly& a, const NaivePoly& b, std::int64_t p) {
  NaivePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = (out[e] + ca * cb) % p;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline NaivePoly naive_sum(const NaivePoly& a, const NaivePoly& b, std::int64_t p, std::int64_t sign = 1) {
  NaivePoly out = a;
  for (const auto& [e, c] : b) out[e] = ((out[e] + sign * c) % p + p) % p;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// --- term order oracle ----------------------------------------------------

/// Textbook grevlex with identity priority: a > b iff deg a > deg b, or the
/// degrees agree and the last nonzero entry of a - b is negative.
inline bool grevlex_greater(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    long d = static_cast<long>(a[i]) - static_cast<long>(b[i]);
    if (d != 0) return d < 0;
  }
  return false;
}

// --- graph oracles --------------------------------------------------------

/// Vertex cover by branching on an uncovered edge: either endpoint joins.
inline std::size_t branching_cover(const Graph& g, VertexMask chosen = 0, std::size_t size = 0,
                                   std::size_t best = SIZE_MAX) {
  if (size >= best) return best;
  for (auto [u, v] : g.edges()) {
    if (((chosen >> u) & 1u) || ((chosen >> v) & 1u)) continue;
    best = branching_cover(g, chosen | (VertexMask{1} << u), size + 1, best);
    best = branching_cover(g, chosen | (VertexMask{1} << v), size + 1, best);
    return best;
  }
  return size;
}

/// Monomial-ideal membership by divisibility alone.
inline bool divisible_by_some(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (g[i] > m[i]) return false;
    return true;
  });
}

// --- homology oracle ------------------------------------------------------

/// Rank of a dense matrix over GF(p) by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t scale = inv(((a[rank][c] % p) + p) % p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] % p == 0) continue;
      const std::int64_t factor = ((a[r][c] % p + p) % p) * scale % p;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - factor * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Reduced homology from faces listed by brute force over all vertex
/// subsets and dense boundary matrices.
inline HomologyProfile naive_reduced_homology(std::size_t nverts, const std::vector<FaceMask>& facets,
                                              std::int64_t p) {
  HomologyProfile out;
  if (facets.empty()) return out;
  std::vector<std::vector<FaceMask>> by_size(nverts + 2);
  for (FaceMask s = 0; s < (FaceMask{1} << nverts); ++s) {
    bool face = std::any_of(facets.begin(), facets.end(), [s](FaceMask f) { return (s & ~f) == 0; });
    if (face) by_size[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  }
  auto boundary_rank = [&](std::size_t size) -> std::size_t {
    if (size == 0 || size >= by_size.size()) return 0;
    const auto& cols = by_size[size];
    const auto& rows = by_size[size - 1];
    if (cols.empty() || rows.empty()) return 0;
    std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (std::size_t v = 0; v < nverts; ++v) {
        if (!((cols[c] >> v) & 1u)) continue;
        auto r = std::find(rows.begin(), rows.end(), cols[c] & ~(FaceMask{1} << v)) - rows.begin();
        m[static_cast<std::size_t>(r)][c] = sign;
        sign = -sign;
      }
    }
    return dense_rank(m, p);
  };
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    if (by_size[s].empty()) continue;
    std::size_t dim = by_size[s].size() - boundary_rank(s) - boundary_rank(s + 1);
    if (dim > 0) out[static_cast<int>(s) - 1] = dim;
  }
  return out;
}

}  // namespace testing
