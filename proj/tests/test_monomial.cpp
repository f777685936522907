#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lctpoly/convert.hpp"
#include "lctpoly/monomial.hpp"

using namespace lctpoly;

namespace {

MonomialIdeal ideal2(std::initializer_list<Monomial> gens) {
  return make_ideal(2, std::vector<Monomial>(gens));
}

}  // namespace

TEST_CASE("ideal construction and minimalization") {
  const MonomialIdeal a = ideal2({{2, 0}, {0, 3}, {2, 1}, {2, 0}});
  CHECK(a.vars == 2);
  CHECK(a.gens == std::vector<Monomial>{{0, 3}, {2, 0}});

  CHECK_THROWS_AS(make_ideal(2, {}), improper_ideal_error);
  CHECK_THROWS_AS(ideal2({{0, 0}}), improper_ideal_error);
  CHECK_THROWS_AS(ideal2({{2, 0}, {0, 0}}), improper_ideal_error);
  CHECK_THROWS_AS(make_ideal(0, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(make_ideal(2, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(ideal2({{-1, 2}}), std::invalid_argument);
}

TEST_CASE("divisibility and order") {
  CHECK(divides({1, 0}, {2, 3}));
  CHECK_FALSE(divides({3, 0}, {2, 3}));
  CHECK(ord(ideal2({{2, 0}, {0, 3}})) == 2);
  CHECK(ord(ideal2({{1, 1}})) == 2);
  CHECK(ord(ideal2({{0, 1}})) == 1);
}

TEST_CASE("products and powers") {
  const MonomialIdeal x = ideal2({{1, 0}});
  const MonomialIdeal y = ideal2({{0, 1}});
  CHECK(product(x, y).gens == std::vector<Monomial>{{1, 1}});

  const MonomialIdeal m = ideal2({{1, 0}, {0, 1}});
  const MonomialIdeal m2 = power(m, 2);
  CHECK(m2.gens == std::vector<Monomial>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(ord(m2) == 2);
  CHECK(ord(power(m, 5)) == 5);
  CHECK_THROWS_AS(power(m, 0), std::invalid_argument);

  const MonomialIdeal a = ideal2({{2, 0}, {0, 3}});
  CHECK(ord(power(a, 3)) == 3 * ord(a));
}

TEST_CASE("degree listings") {
  CHECK(monomials_of_degree(2, 3).size() == 4);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(1, 4) == std::vector<Monomial>{{4}});
  const auto quadrics = monomials_of_degree(2, 2);
  CHECK(std::find(quadrics.begin(), quadrics.end(), Monomial{1, 1}) !=
        quadrics.end());
}

TEST_CASE("truncation") {
  const MonomialIdeal a = ideal2({{2, 0}, {0, 3}});
  CHECK(truncate(a, 1).gens == std::vector<Monomial>{{0, 1}, {1, 0}});
  CHECK(truncate(a, 2).gens ==
        std::vector<Monomial>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(truncate(a, 3).gens ==
        std::vector<Monomial>{{0, 3}, {1, 2}, {2, 0}});
  SECTION("degrees past every generator change nothing") {
    CHECK(truncate(a, 4) == a);
    CHECK(truncate(a, 7) == a);
  }
  CHECK_THROWS_AS(truncate(a, 0), std::invalid_argument);
}

TEST_CASE("Newton polyhedra") {
  SECTION("two-generator staircase") {
    const NewtonPolyhedron p = newton_polyhedron(ideal2({{2, 0}, {0, 3}}));
    CHECK(p.vertices == std::vector<RatVec>{{Rational(0), Rational(3)},
                                            {Rational(2), Rational(0)}});
    CHECK(p.rays == std::vector<RatVec>{{Rational(0), Rational(1)},
                                        {Rational(1), Rational(0)}});
    const HPolyhedron h = hull(p);
    RatVec inside{Rational(1), Rational(2)};
    RatVec outside{Rational(1), Rational(1)};
    CHECK(h.contains(inside));
    CHECK_FALSE(h.contains(outside));
  }
  SECTION("interior generators are dropped") {
    const NewtonPolyhedron p =
        newton_polyhedron(ideal2({{2, 0}, {0, 3}, {1, 2}}));
    CHECK(p.vertices == std::vector<RatVec>{{Rational(0), Rational(3)},
                                            {Rational(2), Rational(0)}});
  }
  SECTION("maximal ideal power") {
    const NewtonPolyhedron p =
        newton_polyhedron(make_ideal(2, monomials_of_degree(2, 2)));
    CHECK(p.vertices == std::vector<RatVec>{{Rational(0), Rational(2)},
                                            {Rational(2), Rational(0)}});
  }
}
