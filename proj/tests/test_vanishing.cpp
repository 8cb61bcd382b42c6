#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "almostcover/error.hpp"
#include "almostcover/families.hpp"
#include "almostcover/vanishing.hpp"
#include "oracles.hpp"

using namespace almostcover;

namespace {

const Field Q = Field::rational();

Point pt(const Field& f, std::initializer_list<long long> xs) {
  Vector v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return Point(v);
}

std::vector<std::string> names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const Monomial& m : ms) out.push_back(m.to_string());
  return out;
}

std::vector<std::string> sorted_basis(const GroebnerData& gb) {
  std::vector<std::string> out;
  for (const Polynomial& g : gb.basis()) out.push_back(g.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial P(std::string_view text, std::size_t n) { return Polynomial::parse(text, Q, n); }

PointSet family(std::string_view spec) { return generate(FamilySpec::parse(spec)); }

}  // namespace

TEST_CASE("Buchberger-Moller examples") {
  SUBCASE("two points on a line") {
    GroebnerData gb(PointSet(Q, 1, {pt(Q, {0}), pt(Q, {1})}));
    CHECK(names(gb.standard_monomials()) == std::vector<std::string>{"1", "x1"});
    CHECK(sorted_basis(gb) == std::vector<std::string>{"x1^2 - x1"});
  }
  SUBCASE("V(2,1)") {
    GroebnerData gb(family("vnk:2:1"));
    CHECK(names(gb.standard_monomials()) == std::vector<std::string>{"1", "x2", "x1"});
    CHECK(sorted_basis(gb) == std::vector<std::string>{"x1*x2", "x1^2 - x1", "x2^2 - x2"});
    // Increasing leading monomials.
    CHECK(gb.basis().front().leading_monomial().to_string() == "x2^2");
  }
  SUBCASE("square") {
    CHECK(names(standard_monomials(family("cube:2"))) == std::vector<std::string>{"1", "x2", "x1", "x1*x2"});
  }
  SUBCASE("empty set") { CHECK_THROWS_AS(GroebnerData(PointSet(Q, 2, {}, true)), Error); }
}

TEST_CASE("standard_monomials examples") {
  CHECK(names(standard_monomials(family("vnk:3:1"))) == std::vector<std::string>{"1", "x3", "x2", "x1"});
  CHECK(names(standard_monomials(PointSet(Q, 2, {pt(Q, {5, 7})}))) == std::vector<std::string>{"1"});
  CHECK(names(standard_monomials(family("vnkt:3:1:1,2"))) ==
        std::vector<std::string>{"1", "x3", "x2", "x1", "x1*x2"});
}

TEST_CASE("indicator_expansion examples") {
  GroebnerData square(family("cube:2"));
  CHECK(square.indicator_expansion(pt(Q, {1, 1})).polynomial == P("x1*x2", 2));
  CHECK(square.indicator_expansion(pt(Q, {0, 0})).polynomial == P("1 - x2 - x1 + x1*x2", 2));
  GroebnerData line(PointSet(Q, 1, {pt(Q, {0}), pt(Q, {1})}));
  CHECK(line.indicator_expansion(pt(Q, {1})).polynomial == P("x1", 1));
  CHECK_THROWS_AS(square.indicator_expansion(pt(Q, {2, 0})), Error);
}

TEST_CASE("indicators on the cube match the product formula") {
  for (int n = 1; n <= 4; ++n) {
    const PointSet cube = family("cube:" + std::to_string(n));
    GroebnerData gb(cube);
    for (const Point& w : cube.points()) {
      Polynomial prod = Polynomial::constant(Q, cube.dim(), Q.one());
      for (std::size_t i = 0; i < cube.dim(); ++i) {
        const Polynomial x = Polynomial::variable(Q, cube.dim(), i);
        prod = prod * (w[i].is_one() ? x : Polynomial::constant(Q, cube.dim(), Q.one()) - x);
      }
      CHECK(gb.indicator_expansion(w).polynomial == prod);
    }
  }
}

TEST_CASE("normal_form examples") {
  GroebnerData vnk(family("vnk:2:1"));
  CHECK(vnk.normal_form(P("x1*x2", 2)).is_zero());
  CHECK(vnk.normal_form(P("3*x1 - x2 + 2", 2)) == P("3*x1 - x2 + 2", 2));
  GroebnerData square(family("cube:2"));
  const Polynomial f = P("x1 + x2 - 1", 2);
  const Polynomial nf = square.normal_form(f * f);
  CHECK(nf == P("1 - x2 - x1 + 2*x1*x2", 2));
  CHECK(nf.evaluate(pt(Q, {0, 0})).is_one());
  CHECK(nf.evaluate(pt(Q, {1, 1})).is_one());
  CHECK(nf.evaluate(pt(Q, {1, 0})).is_zero());
  CHECK(nf.evaluate(pt(Q, {0, 1})).is_zero());
  CHECK_THROWS_AS(square.normal_form(Polynomial(Field::prime(3), 2)), Error);
}

TEST_CASE("separating_degree examples") {
  CHECK(separating_degree(family("cube:3"), pt(Q, {1, 1, 1})) == 3);
  CHECK(separating_degree(family("vnk:2:1"), pt(Q, {0, 0})) == 1);
  CHECK(separating_degree(family("vnkt:4:2:1,2,3"), pt(Q, {1, 1, 1, 0})) == 3);
  CHECK_THROWS_AS(separating_degree(family("cube:2"), pt(Q, {2, 2})), Error);
}

TEST_CASE("Groebner data invariants on random point sets") {
  std::mt19937 rng(41);
  for (const Field& f : {Q, Field::prime(3), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 3);
      const PointSet set = oracle::random_point_set(rng, f, dim(rng), 9, -2, 2);
      const GroebnerData gb(set);
      CHECK(gb.check_invariants().empty());
      CHECK(gb.standard_monomials().size() == set.size());

      // |{standard monomials of degree <= d}| equals the rank of the
      // degree-d evaluation matrix.
      for (std::uint32_t d = 0; d <= gb.max_standard_degree(); ++d) {
        const auto low = std::count_if(gb.standard_monomials().begin(), gb.standard_monomials().end(),
                                       [&](const Monomial& m) { return m.degree() <= d; });
        CHECK(static_cast<std::size_t>(low) == oracle::evaluation_rank(set, d));
      }

      // Separating degrees agree with the rank oracle, and their max is the
      // top standard degree.
      std::uint32_t top = 0;
      for (std::size_t i = 0; i < set.size(); ++i) {
        const std::uint32_t d = gb.separating_degree(i);
        CHECK(d == oracle::separating_degree_by_rank(set, i));
        top = std::max(top, d);
      }
      CHECK(top == gb.max_standard_degree());

      // Partition of unity, and every standard monomial is used somewhere.
      Polynomial sum(f, set.dim());
      std::vector<bool> used(set.size(), false);
      for (std::size_t w = 0; w < set.size(); ++w) {
        const IndicatorExpansion e = gb.indicator_expansion(w);
        for (std::size_t u = 0; u < set.size(); ++u) CHECK(e.polynomial.evaluate(set[u]) == (u == w ? f.one() : f.zero()));
        for (std::size_t k = 0; k < e.coefficients.size(); ++k) used[k] = used[k] || !e.coefficients[k].is_zero();
        sum = sum + e.polynomial;
      }
      CHECK(sum == Polynomial::constant(f, set.dim(), f.one()));
      CHECK(std::all_of(used.begin(), used.end(), [](bool b) { return b; }));

      // Ideal members reduce to zero; normal forms agree with f on V.
      Polynomial member(f, set.dim());
      for (const Polynomial& g : gb.basis()) member = member + oracle::random_polynomial(rng, f, set.dim(), 2, 3) * g;
      CHECK(gb.normal_form(member).is_zero());
      const Polynomial p = oracle::random_polynomial(rng, f, set.dim(), 4, 5);
      const Polynomial nf = gb.normal_form(p);
      for (const Point& u : set.points()) CHECK(nf.evaluate(u) == p.evaluate(u));
      for (const Term& t : nf.terms()) {
        CHECK(std::find(gb.standard_monomials().begin(), gb.standard_monomials().end(), t.monomial) !=
              gb.standard_monomials().end());
      }
    }
  }
}

TEST_CASE("0-1 sets have square-free standard monomials") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet set = oracle::random_point_set(rng, Q, 4, 12, 0, 1);
    for (const Monomial& m : standard_monomials(set)) CHECK(m.is_square_free());
  }
}

TEST_CASE("Theorem main on V(n,k) plus one vertex, n <= 4") {
  for (long n = 1; n <= 4; ++n) {
    const PointSet cube = family("cube:" + std::to_string(n));
    for (long k = 0; k < n; ++k) {
      const PointSet base = family("vnk:" + std::to_string(n) + ":" + std::to_string(k));
      for (const Point& v : cube.points()) {
        if (base.contains(v)) continue;
        const PointSet set = base.with_point(v);
        CHECK(separating_degree(set, v) == static_cast<std::uint32_t>(k + 1));
        CHECK(oracle::separating_degree_by_rank(set, set.size() - 1) == static_cast<std::uint32_t>(k + 1));
      }
    }
  }
}

TEST_CASE("the Sziklai-Weiner product lies in I(V(n,k))") {
  for (long n = 1; n <= 4; ++n) {
    for (long k = 0; k < n; ++k) {
      GroebnerData gb(family("vnk:" + std::to_string(n) + ":" + std::to_string(k)));
      CHECK(gb.normal_form(szw_sharp_polynomial(n, k)).is_zero());
    }
  }
}
