#include <catch2/catch_amalgamated.hpp>

#include "stirling/errors.hpp"
#include "stirling/polynomial.hpp"

using namespace stirling;

namespace {
const ExactPolynomial x = ExactPolynomial::monomial(1, BigRational(1));
}

TEST_CASE("degree and normalization", "[polynomial]") {
    CHECK(ExactPolynomial().degree() == -1);
    CHECK(ExactPolynomial::constant(BigRational(0)).degree() == -1);
    CHECK(ExactPolynomial::constant(BigRational(3)).degree() == 0);
    CHECK(ExactPolynomial::monomial(4, BigRational(2)).degree() == 4);
    CHECK(ExactPolynomial::monomial(4, BigRational(0)).degree() == -1);
    const ExactPolynomial diff = x - x;  // trailing zeros must be stripped
    CHECK(diff.degree() == -1);
}

TEST_CASE("arithmetic", "[polynomial]") {
    const ExactPolynomial one = ExactPolynomial::constant(BigRational(1));
    const ExactPolynomial p = (x + one) * (x - one);
    CHECK(p.degree() == 2);
    CHECK(p.coefficient(0) == BigRational(-1));
    CHECK(p.coefficient(1) == BigRational(0));
    CHECK(p.coefficient(2) == BigRational(1));
    CHECK(p.coefficient(7) == BigRational(0));  // beyond degree
    const ExactPolynomial scaled = make_rational(1, 2) * p;
    CHECK(scaled.leading() == make_rational(1, 2));
    CHECK(p == x * x - one);
}

TEST_CASE("evaluation", "[polynomial]") {
    const ExactPolynomial p = x * x + ExactPolynomial::monomial(1, BigRational(2));
    CHECK(poly_eval(p, BigRational(3)) == BigRational(15));
    CHECK(poly_eval(p, BigRational(-1)) == BigRational(-1));
    CHECK(poly_eval(p, make_rational(1, 2)) == make_rational(5, 4));
    CHECK(poly_eval(ExactPolynomial(), BigRational(9)) == BigRational(0));
}

TEST_CASE("reflection substitutes -x", "[polynomial]") {
    const ExactPolynomial p = x * x + x;
    const ExactPolynomial r = p.reflected();
    CHECK(r.coefficient(1) == BigRational(-1));
    CHECK(r.coefficient(2) == BigRational(1));
    CHECK(p.reflected().reflected() == p);
}

TEST_CASE("interpolation recovers polynomials exactly", "[polynomial]") {
    const ExactPolynomial p = interpolate({{0, BigRational(0)},
                                           {1, BigRational(1)},
                                           {2, BigRational(4)},
                                           {3, BigRational(9)}});
    CHECK(p == x * x);
    const ExactPolynomial q =
        interpolate({{-1, make_rational(1, 3)}, {4, make_rational(1, 3)}});
    CHECK(q == ExactPolynomial::constant(make_rational(1, 3)));
}

TEST_CASE("interpolation rejects duplicate nodes", "[polynomial]") {
    CHECK_THROWS_AS(interpolate({{1, BigRational(0)}, {1, BigRational(2)}}), parameter_error);
}
