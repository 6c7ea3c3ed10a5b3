#include <doctest.h>

#include <algorithm>
#include <random>

#include "edgeideal/errors.hpp"
#include "edgeideal/field.hpp"
#include "edgeideal/monomial.hpp"
#include "edgeideal/polynomial.hpp"
#include "support.hpp"

using namespace edgeideal;
using testing::parse;

TEST_SUITE("field") {
  TEST_CASE("rejects non-primes") {
    CHECK_THROWS_AS(PrimeField(1), PreconditionError);
    CHECK_THROWS_AS(PrimeField(15), PreconditionError);
    CHECK_NOTHROW(PrimeField(32003));
  }

  TEST_CASE("inverses round-trip") {
    for (std::uint32_t p : {2u, 3u, 32003u}) {
      PrimeField f(p);
      for (Coeff a = 1; a < std::min<std::uint32_t>(p, 500); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK_THROWS_AS(f.inv(0), DomainError);
    }
  }

  TEST_CASE("reduce and centered lift") {
    PrimeField f(7);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.reduce(15) == 1);
    CHECK(f.lift(6) == -1);
    CHECK(f.lift(3) == 3);
  }
}

TEST_SUITE("monomial") {
  TEST_CASE("monomial_ops on x1x2 and x2x3") {
    Monomial a{1, 1, 0}, b{0, 1, 1};
    auto ops = monomial_ops(a, b);
    CHECK(ops.product == Monomial{1, 2, 1});
    CHECK_FALSE(ops.divides);
    CHECK(ops.lcm == Monomial{1, 1, 1});
  }

  TEST_CASE("the identity divides everything") {
    Monomial one(4), m{2, 0, 1, 3};
    auto ops = monomial_ops(one, m);
    CHECK(ops.product == m);
    CHECK(ops.divides);
    CHECK(ops.lcm == m);
  }

  TEST_CASE("x1x2 divides x1x2x3x6") {
    Monomial a = Monomial::product_of(6, {0, 1});
    Monomial b = Monomial::product_of(6, {0, 1, 2, 5});
    CHECK(monomial_ops(a, b).divides);
  }

  TEST_CASE("mismatched dimensions") {
    CHECK_THROWS_AS(monomial_ops(Monomial(3), Monomial(4)), DimensionError);
  }

  TEST_CASE("degree and squarefree") {
    Monomial m{1, 0, 2};
    CHECK(m.degree() == 3);
    CHECK_FALSE(m.is_squarefree());
    CHECK(Monomial{1, 1, 0}.is_squarefree());
  }

  TEST_CASE("divides iff lcm equals the second argument") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> e(0, 2);
    for (int trial = 0; trial < 2000; ++trial) {
      Monomial a(4), b(4);
      for (std::size_t i = 0; i < 4; ++i) {
        a.set(i, e(rng));
        b.set(i, e(rng));
      }
      auto ops = monomial_ops(a, b);
      CHECK(ops.divides == (ops.lcm == b));
    }
  }
}

TEST_SUITE("term order") {
  TEST_CASE("x1^2 > x1x2") {
    TermOrder order(2);
    CHECK(order.greater(Monomial{2, 0}, Monomial{1, 1}));
  }

  TEST_CASE("reflexive equality") {
    TermOrder order(3);
    CHECK(order.compare(Monomial{1, 0, 0}, Monomial{1, 0, 0}) == std::strong_ordering::equal);
  }

  TEST_CASE("x2x3 > x1x4 in grevlex") {
    TermOrder order(4);
    CHECK(order.greater(Monomial{0, 1, 1, 0}, Monomial{1, 0, 0, 1}));
  }

  TEST_CASE("degree-2 monomials in 4 variables agree with the textbook definition") {
    std::vector<std::vector<unsigned>> all;
    for (unsigned a = 0; a <= 2; ++a)
      for (unsigned b = 0; b + a <= 2; ++b)
        for (unsigned c = 0; c + b + a <= 2; ++c) {
          unsigned d = 2 - a - b - c;
          all.push_back({a, b, c, d});
        }
    REQUIRE(all.size() == 10);
    TermOrder order(4);
    for (const auto& x : all)
      for (const auto& y : all) CHECK(order.greater(Monomial(x), Monomial(y)) == testing::grevlex_greater(x, y));
  }

  TEST_CASE("random sample: strict total order, multiplicative, degree-refining") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<unsigned> e(0, 3);
    std::vector<Monomial> sample;
    for (int i = 0; i < 40; ++i) {
      Monomial m(5);
      for (std::size_t v = 0; v < 5; ++v) m.set(v, e(rng));
      sample.push_back(m);
    }
    TermOrder order(5);
    for (const auto& a : sample) {
      for (const auto& b : sample) {
        auto ab = order.compare(a, b);
        CHECK((ab == std::strong_ordering::equal) == (a == b));
        CHECK(order.compare(b, a) == (0 <=> ab));
        if (a.degree() > b.degree()) CHECK(ab == std::strong_ordering::greater);
        for (const auto& c : sample) {
          if (order.greater(a, b) && order.greater(b, c)) CHECK(order.greater(a, c));
          if (order.greater(a, b)) CHECK(order.greater(a * c, b * c));
        }
      }
    }
  }

  TEST_CASE("priority permutation changes the ranking of variables") {
    TermOrder order(std::vector<std::size_t>{2, 1, 0});
    CHECK(order.greater(Monomial{0, 0, 1}, Monomial{1, 0, 0}));
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("zero is the additive identity") {
    auto r = testing::ring(32003, 6);
    auto f = parse(r, "x1*x6 + x2*x3");
    CHECK(poly_arith(f, Polynomial(r)).sum == f);
  }

  TEST_CASE("self-cancellation") {
    auto r = testing::ring(32003, 6);
    auto f = parse(r, "x1*x6 + x2*x3");
    CHECK(poly_arith(f, f).difference.is_zero());
  }

  TEST_CASE("(x1x6 + x2x3)(x1x6 - x2x3) over GF(3)") {
    auto r = testing::ring(3, 6);
    auto f = parse(r, "x1*x6 + x2*x3");
    auto g = parse(r, "x1*x6 - x2*x3");
    auto product = poly_arith(f, g).product;
    CHECK(product == parse(r, "x1^2*x6^2 + 2*x2^2*x3^2"));
    CHECK(testing::naive(product) == testing::naive_product(testing::naive(f), testing::naive(g), 3));
  }

  TEST_CASE("coefficients vanishing mod p are dropped") {
    auto r = testing::ring(2, 2);
    auto f = parse(r, "x1 + x2");
    CHECK(f + f == Polynomial(r));
    CHECK((f * f) == parse(r, "x1^2 + x2^2"));
  }

  TEST_CASE("terms are strictly descending with nonzero coefficients") {
    auto r = testing::ring(5, 3);
    Polynomial f(r, {{1, Monomial{0, 0, 1}}, {3, Monomial{2, 0, 0}}, {4, Monomial{0, 0, 1}}, {0, Monomial{1, 1, 0}}});
    REQUIRE(f.size() == 1);
    CHECK(f.leading_monomial() == Monomial{2, 0, 0});
  }

  TEST_CASE("field and dimension mismatches") {
    auto a = testing::ring(3, 2), b = testing::ring(5, 2), c = testing::ring(3, 3);
    CHECK_THROWS_AS(poly_arith(parse(a, "x1"), parse(b, "x1")), FieldMismatchError);
    CHECK_THROWS_AS(poly_arith(parse(a, "x1"), parse(c, "x1")), DimensionError);
  }

  TEST_CASE("leading term of zero") {
    auto r = testing::ring(3, 2);
    CHECK_THROWS_AS(Polynomial(r).leading_term(), DomainError);
  }

  TEST_CASE("ring axioms against the naive oracle") {
    for (std::uint32_t p : {2u, 3u, 32003u}) {
      CAPTURE(p);
      auto r = testing::ring(p, 4);
      std::mt19937 rng(p);
      for (int trial = 0; trial < 60; ++trial) {
        auto f = testing::random_poly(r, rng);
        auto g = testing::random_poly(r, rng);
        auto h = testing::random_poly(r, rng);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK(f - f == Polynomial(r));
        CHECK(testing::naive(f * g) == testing::naive_product(testing::naive(f), testing::naive(g), p));
        CHECK(testing::naive(f + g) == testing::naive_sum(testing::naive(f), testing::naive(g), p));
        CHECK(testing::naive(f - g) == testing::naive_sum(testing::naive(f), testing::naive(g), p, -1));
        for (std::size_t i = 1; i < f.terms().size(); ++i)
          CHECK(r->order().greater(f.terms()[i - 1].mono, f.terms()[i].mono));
      }
    }
  }

  TEST_CASE("mapping into a larger ring over another field") {
    auto r = testing::ring(32003, 2);
    auto f = parse(r, "x1 - x2");
    auto target = r->with_extra_variable("t")->over(PrimeField(3));
    auto g = f.mapped_to(target);
    CHECK(g.ring()->nvars() == 3);
    CHECK(g.terms()[1].coeff == 2);
  }
}
