#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsp4kit/exact.hpp"

using namespace gsp4kit;

namespace {

LaurentPoly v(std::size_t i, int p = 1) { return LaurentPoly::variable(i, p); }
LaurentPoly c(long n) { return LaurentPoly::constant(Rational(n)); }

Rational random_nonzero(std::mt19937& g) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1);
    return make_rational(sign(g) ? num(g) : -num(g), den(g));
}

}  // namespace

TEST_CASE("rationals parse, normalize and print") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("rational squares") {
    CHECK(is_rational_square(make_rational(9, 4)));
    CHECK(is_rational_square(Rational(0)));
    CHECK_FALSE(is_rational_square(Rational(2)));
    CHECK_FALSE(is_rational_square(Rational(-1)));
    CHECK_FALSE(is_rational_square(make_rational(4, 3)));
}

TEST_CASE("gaussian rationals") {
    const GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    const GaussRational z(make_rational(3, 2), Rational(-2));
    CHECK(z / z == GaussRational(1));
    CHECK(z * z.conj() == GaussRational(z.norm()));
    CHECK_THROWS(GaussRational(1) / GaussRational(0));
}

TEST_CASE("binomial expansion matches Pascal's triangle") {
    const LaurentPoly p = (v(XI1) + c(1)).pow(7);
    long binom = 1;
    for (int j = 0; j <= 7; ++j) {
        CHECK(p.coefficient(XI1, j).constant_term() == Rational(binom));
        binom = binom * (7 - j) / (j + 1);
    }
}

TEST_CASE("laurent arithmetic laws and evaluation homomorphism") {
    std::mt19937 g(3);
    const LaurentPoly a = v(XI1) * v(U, -2) + make_rational(2, 3) * v(B1) - c(5);
    const LaurentPoly b = v(XI2, -1) - v(XI3) * v(XI4) + v(U);
    CHECK(a * b == b * a);
    CHECK((a + b) * a == a * a + b * a);
    CHECK(a - a == LaurentPoly());
    CHECK(poly_arith(PolyOp::Pow, a, nullptr, 3) == a * a * a);
    for (int trial = 0; trial < 20; ++trial) {
        Assignment pt;
        for (std::size_t i = 0; i < SATAKE_ARITY; ++i) pt[i] = random_nonzero(g);
        const Rational ea = pt[XI1] / (pt[U] * pt[U]) + make_rational(2, 3) * pt[B1] - 5;
        const Rational eb = 1 / pt[XI2] - pt[XI3] * pt[XI4] + pt[U];
        CHECK(specialize(a, pt) == ea);
        CHECK(specialize(a * b, pt) == ea * eb);
    }
}

TEST_CASE("partial specialization keeps free variables") {
    const LaurentPoly p = v(XI1) * v(U) + v(U, -1);
    const LaurentPoly q = specialize_partial(p, {{XI1, Rational(2)}});
    CHECK(q == c(2) * v(U) + v(U, -1));
    CHECK_THROWS_AS(specialize(p, {{XI1, Rational(2)}}), PreconditionError);
}

TEST_CASE("exact division recovers factors and rejects remainders") {
    const LaurentPoly f = v(XI1) * v(XI2, -1) - v(U, -2);
    const LaurentPoly g = c(1) - v(B1) * v(U, -1) + v(XI3, 2);
    CHECK(poly_div_exact(f * g, g) == f);
    CHECK(poly_div_exact(f * g, f) == g);
    try {
        poly_div_exact(f * g + c(1), g);
        FAIL("expected InexactDivision");
    } catch (const InexactDivision& e) {
        CHECK_FALSE(e.residual.is_zero());
    }
    CHECK_THROWS(poly_div_exact(f, LaurentPoly()));
}

TEST_CASE("canonical text form") {
    CHECK((c(2) * v(XI1) * v(U, -1)).to_string() == "2 * xi1^1 * u^-1");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::variable(2, 3, 4).to_string() == "1 * x3^3");
}

TEST_CASE("geometric series inverts 1 - fX") {
    const LaurentPoly f = v(B1) * v(U, -1) + v(XI2);
    const unsigned n = 8;
    TruncatedSeries one_minus(n);
    one_minus.set_coeff(0, c(1));
    one_minus.set_coeff(1, -f);
    CHECK(series_inverse_one_minus(f, n) * one_minus == TruncatedSeries::one(n));
    for (unsigned k = 0; k <= n; ++k) CHECK(series_inverse_one_minus(f, n).coeff(k) == f.pow(k));
}

TEST_CASE("series truncation drops high powers") {
    const LaurentPoly p = c(1) + v(X) * v(XI1) + v(X, 5);
    const TruncatedSeries s = TruncatedSeries::from_poly(p, 3);
    CHECK(s.coeff(1) == v(XI1));
    CHECK(s.coeff(3).is_zero());
    CHECK(s.to_poly() == c(1) + v(X) * v(XI1));
    CHECK_THROWS(TruncatedSeries(2) * TruncatedSeries(3));
}
