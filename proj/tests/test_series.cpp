#include <doctest.h>

#include "hahnexp/errors.hpp"
#include "hahnexp/series.hpp"

using namespace hahnexp;

namespace {

// c * t^(q e_0)
SeriesElement T(const Rational& q, const Rational& c = 1) {
    return SeriesElement::monomial(HahnElement::monomial(ChainPoint(0), Scalar(q)),
                                   Scalar(c));
}

HahnElement level(const Rational& q) {
    return HahnElement::monomial(ChainPoint(0), Scalar(q));
}

bool equal(const SeriesElement& a, const SeriesElement& b) {
    return series_cmp(a, b).is_zero();
}

} // namespace

TEST_CASE("field arithmetic") {
    SeriesElement one_plus_t = series_add(SeriesElement::one(), T(1));
    SeriesElement one_minus_t = series_sub(SeriesElement::one(), T(1));
    CHECK(equal(series_mul(one_plus_t, one_minus_t),
                series_sub(SeriesElement::one(), T(2))));

    CHECK(equal(series_mul(T(Rational(1, 2)), T(Rational(1, 2))), T(1)));

    SeriesElement a = series_add(T(-1), SeriesElement::one());
    CHECK(equal(series_sub(a, T(-1)), SeriesElement::one()));
}

TEST_CASE("valuation, sign and order") {
    SeriesElement s = series_add(series_add(T(-2, 3), T(0, 5)), T(1));
    CHECK(series_valuation(s).exponent().terms().front().coeff.rational() == -2);
    CHECK(series_valuation(SeriesElement::one()).exponent().is_zero());
    CHECK(series_valuation(SeriesElement::zero()).is_infinity());

    CHECK(series_cmp(T(-1), SeriesElement::one()).is_positive());
    CHECK(series_sign(series_add(T(-5, -1), T(0, 1000))).is_negative());
    CHECK(series_cmp(T(1), T(2)).is_positive());
}

TEST_CASE("residue map") {
    CHECK(series_residue(series_add(SeriesElement::constant(Scalar(3)), T(1))).rational() ==
          3);
    CHECK(series_residue(T(1, 7)).is_zero());
    CHECK_THROWS_AS(series_residue(T(-1)), NotInValuationRing);
}

TEST_CASE("additive decomposition splits by exponent sign") {
    SeriesElement s = series_add(series_add(T(-3, 2), T(0, 5)), T(1, 7));
    AdditiveDecomposition d = additive_decompose(s);
    CHECK(equal(d.infinite_part, T(-3, 2)));
    CHECK(d.constant.rational() == 5);
    CHECK(equal(d.infinitesimal, T(1, 7)));
    // recombination is exact
    SeriesElement back = series_add(series_add(d.infinite_part,
                                               SeriesElement::constant(d.constant)),
                                    d.infinitesimal);
    CHECK(equal(back, s));

    AdditiveDecomposition z = additive_decompose(SeriesElement::zero());
    CHECK(z.infinite_part.is_zero());
    CHECK(z.constant.is_zero());
    CHECK(z.infinitesimal.is_zero());
}

TEST_CASE("multiplicative decomposition") {
    SeriesElement s = series_add(T(-3, 2), T(-1));
    MultiplicativeDecomposition d = multiplicative_decompose(s);
    CHECK(hahn_cmp(d.monomial_exponent, level(-3)).is_zero());
    CHECK(d.unit_constant.rational() == 2);
    CHECK(equal(d.one_plus_eps,
                series_add(SeriesElement::one(), T(2, Rational(1, 2)))));
    SeriesElement back = series_mul(
        SeriesElement::monomial(d.monomial_exponent, d.unit_constant), d.one_plus_eps);
    CHECK(equal(back, s));

    MultiplicativeDecomposition c = multiplicative_decompose(T(0, 5));
    CHECK(c.monomial_exponent.is_zero());
    CHECK(c.unit_constant.rational() == 5);
    CHECK(equal(c.one_plus_eps, SeriesElement::one()));

    CHECK_THROWS_AS(multiplicative_decompose(T(1, -1)), NotPositive);
}

TEST_CASE("truncated inversion") {
    SeriesElement r = series_invert(series_sub(SeriesElement::one(), T(1)), level(4));
    SeriesElement expect =
        series_add(series_add(SeriesElement::one(), T(1)), series_add(T(2), T(3)));
    CHECK(equal(r.with_trunc(std::nullopt), expect));
    REQUIRE(r.trunc());
    CHECK(hahn_cmp(*r.trunc(), level(4)).is_zero());

    CHECK_THROWS_AS(series_invert(SeriesElement::zero(), level(4)), DivisionByZero);

    // invert(2 t^-1 + 1) just past t^3: residual sits above the contract line
    SeriesElement a = series_add(T(-1, 2), SeriesElement::one());
    SeriesElement inv = series_invert(a, level(Rational(7, 2)));
    SeriesElement expect2 = series_add(series_add(T(1, Rational(1, 2)),
                                                  T(2, Rational(-1, 4))),
                                       T(3, Rational(1, 8)));
    CHECK(equal(inv.with_trunc(std::nullopt), expect2));
    // contract: a * inv agrees with 1 below cutoff + v(a) = 7/2 - 1
    SeriesElement residual = series_sub(series_mul(a, inv), SeriesElement::one());
    CHECK(residual.truncated_at(level(Rational(5, 2))).is_zero());
}

TEST_CASE("truncated roots of positive series") {
    CHECK(equal(series_nth_root_positive(T(2, 4), 2, level(5)).with_trunc(std::nullopt),
                T(1, 2)));
    CHECK(equal(series_nth_root_positive(T(1), 2, level(5)).with_trunc(std::nullopt),
                T(Rational(1, 2))));

    SeriesElement r = series_nth_root_positive(
        series_add(SeriesElement::one(), T(1)), 2, level(Rational(5, 2)));
    SeriesElement expect = series_add(
        series_add(SeriesElement::one(), T(1, Rational(1, 2))), T(2, Rational(-1, 8)));
    CHECK(equal(r.with_trunc(std::nullopt), expect));
    // square it: agrees with 1 + t below the certified level
    SeriesElement back = series_sub(series_mul(r, r),
                                    series_add(SeriesElement::one(), T(1)));
    CHECK(back.truncated_at(level(Rational(5, 2))).is_zero());

    CHECK_THROWS_AS(series_nth_root_positive(T(0, -1), 2, level(5)), NotPositive);
}

TEST_CASE("formal derivative in rational-exponent mode") {
    CHECK(equal(formal_derivative(T(2)), T(1, 2)));
    CHECK(formal_derivative(SeriesElement::constant(Scalar(5))).is_zero());
    CHECK(equal(formal_derivative(series_add(T(Rational(1, 2), 4), T(3))),
                series_add(T(Rational(-1, 2), 2), T(2, 3))));

    SeriesElement bad = SeriesElement::monomial(
        HahnElement(std::vector<HahnElement::Term>{{ChainPoint(0), Scalar(1)},
                                                   {ChainPoint(1), Scalar(1)}}));
    CHECK_THROWS_AS(formal_derivative(bad), NonRationalExponents);
}

TEST_CASE("truncation certificates propagate") {
    SeriesElement a = series_add(SeriesElement::one(), T(1)).with_trunc(level(3));
    SeriesElement b = series_add(SeriesElement::one(), T(2)).with_trunc(level(5));
    CHECK(hahn_cmp(*series_add(a, b).trunc(), level(3)).is_zero());
    // mul shifts by the other factor's valuation (both have valuation 0 here)
    CHECK(hahn_cmp(*series_mul(a, b).trunc(), level(3)).is_zero());
    SeriesElement shifted = series_mul(T(2), a);
    CHECK(hahn_cmp(*shifted.trunc(), level(5)).is_zero());
}
