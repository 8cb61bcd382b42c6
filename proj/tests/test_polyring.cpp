#include <doctest.h>

#include <random>

#include "almostcover/error.hpp"
#include "almostcover/polynomial.hpp"
#include "almostcover/vanishing.hpp"
#include "oracles.hpp"

using namespace almostcover;

namespace {

const Field Q = Field::rational();

Monomial mono(std::initializer_list<std::uint32_t> e) { return Monomial(std::vector<std::uint32_t>(e)); }

Polynomial P(std::string_view text, std::size_t n, const Field& f = Q) { return Polynomial::parse(text, f, n); }

Monomial random_monomial(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> e(0, 3);
  std::vector<std::uint32_t> out(n);
  for (auto& x : out) x = e(rng);
  return Monomial(out);
}

}  // namespace

TEST_CASE("deglex compare examples") {
  CHECK(compare(TermOrder::deglex, mono({1, 0}), mono({0, 2})) == std::strong_ordering::less);
  CHECK(compare(TermOrder::deglex, mono({1, 1}), mono({0, 2})) == std::strong_ordering::greater);
  CHECK(compare(TermOrder::deglex, mono({0, 0}), mono({1, 0})) == std::strong_ordering::less);
  CHECK(compare(TermOrder::lex, mono({0, 0}), mono({1, 0})) == std::strong_ordering::less);
  CHECK(compare(TermOrder::lex, mono({1, 0}), mono({0, 2})) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare(TermOrder::deglex, mono({1}), mono({1, 0})), Error);
}

TEST_CASE("term order laws on random triples") {
  std::mt19937 rng(3);
  for (TermOrder order : {TermOrder::deglex, TermOrder::lex}) {
    for (int trial = 0; trial < 500; ++trial) {
      const Monomial a = random_monomial(rng, 3), b = random_monomial(rng, 3), c = random_monomial(rng, 3);
      const auto ab = compare(order, a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(compare(order, b, a) == (0 <=> ab));
      CHECK(compare(order, Monomial::one(3), a) != std::strong_ordering::greater);
      CHECK(compare(order, a * c, b * c) == ab);
      if (ab < 0 && compare(order, b, c) < 0) CHECK(compare(order, a, c) < 0);
      if (order == TermOrder::deglex && a.degree() < b.degree()) CHECK(ab < 0);
    }
  }
}

TEST_CASE("leading_term examples") {
  const Polynomial f = P("3*x1 + x2^2", 2);
  CHECK(f.leading_monomial() == mono({0, 2}));
  CHECK(f.leading_coefficient().is_one());
  const Polynomial c = Polynomial::constant(Q, 2, Q.from_int(7));
  CHECK(c.leading_monomial() == Monomial::one(2));
  CHECK(c.leading_coefficient() == Q.from_int(7));
  CHECK(P("x1*x2 - x1", 2).leading_monomial() == mono({1, 1}));
  CHECK_THROWS_AS(Polynomial(Q, 2).leading_term(), Error);
  // Under lex x1 beats x2^2.
  CHECK(f.with_order(TermOrder::lex).leading_monomial() == mono({1, 0}));
}

TEST_CASE("arithmetic examples") {
  CHECK(P("x1 + 1", 1) + P("-x1", 1) == P("1", 1));
  CHECK(P("x1 - 1", 1) * P("x1 + 1", 1) == P("x1^2 - 1", 1));
  const Field f2 = Field::prime(2);
  const Polynomial g = P("x1 + 1", 1, f2);
  CHECK(g * g == P("x1^2 + 1", 1, f2));
  CHECK((g * g).to_string() == "x1^2 + 1");
  CHECK_THROWS_AS(P("x1", 1) + P("x1", 1, f2), Error);
  CHECK_THROWS_AS(P("x1", 1) + P("x1", 2), Error);
  CHECK(P("x1", 2).scaled(Q.parse("3/7")).to_string() == "3/7*x1");
}

TEST_CASE("rendering and parsing") {
  CHECK(P("1 - 2*x2 + x1*x2", 2).to_string() == "x1*x2 - 2*x2 + 1");
  CHECK(Polynomial(Q, 3).to_string() == "0");
  CHECK(P("x1^2*x3", 3).terms().front().monomial.to_string() == "x1^2*x3");
  CHECK(P("-1/2 - x1", 1).to_string() == "-x1 - 1/2");
  CHECK_THROWS_AS(P("x3", 2), ParseError);
  CHECK_THROWS_AS(P("x1 +", 2), ParseError);
  CHECK_THROWS_AS(P("2**x1", 2), ParseError);
  std::mt19937 rng(7);
  for (const Field& f : {Q, Field::prime(5)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Polynomial p = oracle::random_polynomial(rng, f, 3, 4, 5);
      CHECK(Polynomial::parse(p.to_string(), f, 3) == p);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(13);
  for (const Field& f : {Q, Field::prime(3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Polynomial a = oracle::random_polynomial(rng, f, 2, 3, 4);
      const Polynomial b = oracle::random_polynomial(rng, f, 2, 3, 4);
      const Polynomial c = oracle::random_polynomial(rng, f, 2, 3, 4);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      // Canonical form: nonzero coefficients in strictly decreasing order.
      const Polynomial prod = a * b;
      for (std::size_t i = 0; i < prod.terms().size(); ++i) {
        CHECK_FALSE(prod.terms()[i].coefficient.is_zero());
        if (i > 0) CHECK(compare(TermOrder::deglex, prod.terms()[i - 1].monomial, prod.terms()[i].monomial) > 0);
      }
    }
  }
}

TEST_CASE("reduce examples") {
  const std::vector<Polynomial> g1 = {P("x1^2 - x1", 1)};
  CHECK(reduce(P("x1^2", 1), g1) == P("x1", 1));
  const std::vector<Polynomial> g2 = {P("x1*x2", 2)};
  CHECK(reduce(P("x1*x2", 2), g2).is_zero());
  const std::vector<Polynomial> g3 = {P("x1^2 - x1", 2), P("x2^2 - x2", 2)};
  CHECK(reduce(P("x1^2*x2", 2), g3) == P("x1*x2", 2));
  const std::vector<Polynomial> bad = {Polynomial(Q, 2)};
  CHECK_THROWS_AS(reduce(P("x1", 2), bad), Error);
}

TEST_CASE("reduce properties with random divisors") {
  std::mt19937 rng(19);
  for (const Field& f : {Q, Field::prime(5)}) {
    for (int trial = 0; trial < 150; ++trial) {
      std::vector<Polynomial> g;
      for (int i = 0; i < 3; ++i) {
        Polynomial d = oracle::random_polynomial(rng, f, 2, 3, 3);
        if (!d.is_zero()) g.push_back(d);
      }
      const Polynomial p = oracle::random_polynomial(rng, f, 2, 5, 6);
      const Polynomial h = reduce(p, g);
      CHECK(reduce(h, g) == h);
      CHECK(h.degree() <= p.degree());
      for (const Term& t : h.terms()) {
        for (const Polynomial& d : g) CHECK_FALSE(d.leading_monomial().divides(t.monomial));
      }
    }
  }
}

TEST_CASE("f - reduce(f, G) reduces to zero when G is a Groebner basis") {
  std::mt19937 rng(31);
  for (const Field& f : {Q, Field::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const PointSet set = oracle::random_point_set(rng, f, 2, 6, -2, 2);
      const GroebnerData gb(set);
      const Polynomial p = oracle::random_polynomial(rng, f, 2, 5, 6);
      const Polynomial h = reduce(p, gb.basis());
      CHECK(reduce(p - h, gb.basis()).is_zero());
    }
  }
}
