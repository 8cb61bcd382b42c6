#include <doctest.h>

#include <string>

#include "almostcover/bounds.hpp"
#include "almostcover/cover.hpp"
#include "almostcover/error.hpp"
#include "almostcover/families.hpp"
#include "almostcover/io.hpp"
#include "almostcover/vanishing.hpp"

using namespace almostcover;

namespace {

const Field Q = Field::rational();

std::string points_of(const PointSet& set) {
  std::string out;
  for (const Point& p : set.points()) out += p.to_string();
  return out;
}

PointSet family(const std::string& spec) { return generate(FamilySpec::parse(spec)); }

unsigned long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("generate examples") {
  const PointSet j = family("jnq:2:3");
  CHECK(points_of(j) == "(1, 1)(1, 2)(1, 3)(2, 2)(2, 3)(3, 3)");
  CHECK(j.field() == Q);
  const PointSet v = family("vnk:3:1");
  CHECK(points_of(v) == "(0, 0, 0)(1, 0, 0)(0, 1, 0)(0, 0, 1)");
  const PointSet p = family("perm:3");
  CHECK(points_of(p) == "(1, 2, 3)(1, 3, 2)(2, 1, 3)(2, 3, 1)(3, 1, 2)(3, 2, 1)");
  const PointSet t = family("vnkt:3:1:1,2");
  CHECK(t.size() == 5);
  CHECK(t[4].to_string() == "(1, 1, 0)");
  const PointSet ag = family("ag:2:3");
  CHECK(ag.field() == Field::prime(3));
  CHECK(ag.size() == 9);
  const PointSet emb = family("jnq:2:3:0,1,5@gf:7");
  CHECK(points_of(emb) == "(0, 0)(0, 1)(0, 5)(1, 1)(1, 5)(5, 5)");
}

TEST_CASE("family spec errors") {
  for (const char* bad : {"vnk:3:3", "vnk:3:-1", "vnkt:3:1:1", "vnkt:3:1:1,1", "vnkt:3:1:1,4", "jnq:2:1",
                          "ag:2:4", "ag:2:3@rational", "inq:2:3@gf:5", "jnq:2:3:1,1,2", "jnq:2:3:1,2",
                          "jnq:2:8@gf:7", "blob:2", "cube", "cube:0", "cube:x", "perm:9"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(FamilySpec::parse(bad), Error);
  }
  CHECK(FamilySpec::parse("cube:3@gf:5").to_string() == "cube:3@gf:5");
  CHECK(FamilySpec::parse("ag:2:3").to_string() == "ag:2:3");
  CHECK(FamilySpec::parse("vnkt:4:1:2,4").to_string() == "vnkt:4:1:2,4");
}

TEST_CASE("generated sizes match the closed forms") {
  for (long n = 1; n <= 5; ++n) {
    CHECK(mpz_class(static_cast<unsigned long>(family("cube:" + std::to_string(n)).size())) == mpz_class(1) << n);
    mpz_class partial = 0;
    for (long k = 0; k < n; ++k) {
      partial += binomial(n, k);
      const PointSet v = family("vnk:" + std::to_string(n) + ":" + std::to_string(k));
      CHECK(mpz_class(static_cast<unsigned long>(v.size())) == partial);
      CHECK(v.is_zero_one());
    }
    for (long q = 2; q <= 4; ++q) {
      const std::string nq = std::to_string(n) + ":" + std::to_string(q);
      CHECK(mpz_class(static_cast<unsigned long>(family("jnq:" + nq).size())) == binomial(n + q - 1, q - 1));
      CHECK(family("inq:" + nq).size() == family("jnq:" + nq).size());
    }
    CHECK(family("perm:" + std::to_string(n)).size() == factorial(n));
    for (long q : {2L, 3L}) {
      mpz_class expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
      CHECK(mpz_class(static_cast<unsigned long>(family("ag:" + std::to_string(n) + ":" + std::to_string(q)).size())) ==
            expect);
    }
  }
}

TEST_CASE("sharp_cover_vnk") {
  CHECK(sharp_cover_vnk(3, 1).size() == 1);
  CHECK(sharp_cover_vnk(3, 1).front().to_string() == "x1 + x2 + x3 = 1");
  const auto h42 = sharp_cover_vnk(4, 2);
  REQUIRE(h42.size() == 2);
  CHECK(h42[1].to_string() == "x1 + x2 + x3 + x4 = 2");
  CHECK(sharp_cover_vnk(3, 0).empty());
  CHECK_THROWS_AS(sharp_cover_vnk(3, 3), Error);
  for (long n = 1; n <= 4; ++n) {
    for (long k = 0; k < n; ++k) {
      const PointSet v = family("vnk:" + std::to_string(n) + ":" + std::to_string(k));
      const auto cover = sharp_cover_vnk(n, k);
      CHECK(verify_cover(v, v[0], cover));
      CHECK(min_almost_cover(v, v[0]).size == static_cast<std::size_t>(k));
    }
  }
}

TEST_CASE("szw_sharp_polynomial") {
  CHECK(szw_sharp_polynomial(2, 1) == Polynomial::parse("x1 + x2", Q, 2) * Polynomial::parse("x1 + x2 - 1", Q, 2));
  CHECK(szw_sharp_polynomial(3, 0) == Polynomial::parse("x1 + x2 + x3", Q, 3));
  const Polynomial f21 = szw_sharp_polynomial(2, 1);
  const PointSet square = family("cube:2");
  CHECK(f21.evaluate(square[3]) == Q.from_int(2));
  const Polynomial f32 = szw_sharp_polynomial(3, 2);
  CHECK(f32.degree() == 3);
  const PointSet cube = family("cube:3");
  for (const Point& p : cube.points()) {
    const bool all_ones = p == cube[7];
    CHECK(f32.evaluate(p).is_zero() != all_ones);
  }
  for (long n = 1; n <= 5; ++n) {
    for (long k = 0; k < n; ++k) {
      const PointSet v = family("vnk:" + std::to_string(n) + ":" + std::to_string(k));
      CHECK(GroebnerData(v).normal_form(szw_sharp_polynomial(n, k)).is_zero());
    }
  }
  CHECK_THROWS_AS(szw_sharp_polynomial(2, 2), Error);
}

TEST_CASE("symmetry_generators") {
  for (const char* spec : {"cube:2", "cube:3", "perm:3", "perm:4", "ag:2:3", "ag:3:2"}) {
    CAPTURE(spec);
    const FamilySpec fs = FamilySpec::parse(spec);
    const PointSet set = generate(fs);
    const std::vector<AffineMap> gens = symmetry_generators(fs);
    for (const AffineMap& g : gens) CHECK_NOTHROW(validate_symmetry(set, g));
    CHECK(orbit_reduce(set, gens).is_transitive);
  }
  // Flips alone already reach every vertex of the square.
  const std::vector<AffineMap> flips = {AffineMap::flip(Q, 2, 0), AffineMap::flip(Q, 2, 1)};
  CHECK(orbit_reduce(family("cube:2"), flips).is_transitive);
  CHECK_THROWS_WITH_AS(symmetry_generators(FamilySpec::parse("vnk:3:1")), doctest::Contains("no declared symmetry"),
                       Error);
  CHECK_THROWS_AS(symmetry_generators(FamilySpec::parse("jnq:2:3")), Error);
}

TEST_CASE("point-set files") {
  const std::string text =
      "# three points\n"
      "field rational\n"
      "dim 2\n"
      "point 0 0\n"
      "point 1/2 -3   # trailing comment\n"
      "point 2 4/2\n";
  const PointSet set = parse_point_set(text);
  CHECK(set.size() == 3);
  CHECK(set[1].to_string() == "(1/2, -3)");
  CHECK(set[2].to_string() == "(2, 2)");
  const std::string canonical = write_point_set(set);
  CHECK(canonical == "field rational\ndim 2\npoint 0 0\npoint 1/2 -3\npoint 2 2\n");
  CHECK(write_point_set(parse_point_set(canonical)) == canonical);

  const PointSet gf = parse_point_set("field gf:5\ndim 1\npoint 7\npoint -1\n");
  CHECK(write_point_set(gf) == "field gf:5\ndim 1\npoint 2\npoint 4\n");

  auto line_of = [](const std::string& bad) -> std::size_t {
    try {
      parse_point_set(bad);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("field rational\ndim 2\npoint 0 0\npoint 0 0\n") == 4);
  CHECK(line_of("field rational\ndim 2\npoint 0\n") == 3);
  CHECK(line_of("field gf:4\n") == 1);
  CHECK(line_of("dim 2\npoint 0 0\n") == 2);
  CHECK(line_of("field rational\ndim 2\n\npoint 0 x\n") == 4);
  CHECK(line_of("field rational\ndim 2\nvertex 1 1\n") == 3);
  CHECK_THROWS_AS(parse_point_set("field rational\ndim 2\n"), ParseError);
  CHECK_THROWS_AS(read_point_set_file("/nonexistent/points.txt"), ParseError);

  for (const char* spec : {"cube:3", "jnq:2:3:0,1,5@gf:7", "perm:3", "inq:2:3"}) {
    const PointSet s = family(spec);
    CHECK(write_point_set(parse_point_set(write_point_set(s))) == write_point_set(s));
    CHECK(parse_point_set(write_point_set(s)).points() == s.points());
  }
}
