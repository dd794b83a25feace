#include <doctest.h>

#include "hahnexp/errors.hpp"
#include "hahnexp/exp_field.hpp"

using namespace hahnexp;

namespace {

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

TEST_CASE("exp_right is the truncated Taylor exponential") {
    CHECK(equal(exp_right(SeriesElement::zero(), level(4)), SeriesElement::one()));

    SeriesElement r = exp_right(T(1), level(Rational(7, 2)));
    SeriesElement expect = series_add(
        series_add(SeriesElement::one(), T(1)),
        series_add(T(2, Rational(1, 2)), T(3, Rational(1, 6))));
    CHECK(equal(r.with_trunc(std::nullopt), expect));

    CHECK_THROWS_AS(exp_right(T(-1), level(4)), NotInfinitesimal);
    CHECK_THROWS_AS(exp_right(SeriesElement::one(), level(4)), NotInfinitesimal);
}

TEST_CASE("log_right is the truncated Mercator logarithm") {
    CHECK(log_right(SeriesElement::one(), level(4)).is_zero());

    SeriesElement u = series_add(SeriesElement::one(), T(1));
    SeriesElement r = log_right(u, level(Rational(7, 2)));
    SeriesElement expect = series_add(
        series_add(T(1), T(2, Rational(-1, 2))), T(3, Rational(1, 3)));
    CHECK(equal(r.with_trunc(std::nullopt), expect));

    // composition: log(exp(t)) = t up to cutoff
    SeriesElement back = log_right(exp_right(T(1), level(4)), level(4));
    CHECK(series_sub(back, T(1)).truncated_at(level(4)).is_zero());

    CHECK_THROWS_AS(log_right(T(0, 2), level(4)), NotOnePlusInfinitesimal);
}

TEST_CASE("exp_left relabels support through h inverse") {
    GroupExponential h(GroupIsoMode::Strong);
    CHECK(equal(exp_left(SeriesElement::zero(), h), SeriesElement::one()));

    HahnElement g0 = h.apply(ChainPoint(0));
    SeriesElement e = exp_left(SeriesElement::monomial(g0), h);
    // h^{-1}(g0) = 0, so the image is the single monomial t^{-e_0}
    REQUIRE(e.terms().size() == 1);
    CHECK(hahn_cmp(e.terms().front().exponent, level(-1)).is_zero());
    CHECK(e.terms().front().coeff.is_one());

    // additivity: exp_left(a+b) = exp_left(a) * exp_left(b)
    HahnElement g1 = h.apply(ChainPoint(1));
    SeriesElement a = SeriesElement::monomial(g0, Scalar(Rational(3, 2)));
    SeriesElement b = SeriesElement::monomial(g1, Scalar(-2));
    CHECK(equal(exp_left(series_add(a, b), h),
                series_mul(exp_left(a, h), exp_left(b, h))));

    // round trip through log_left
    SeriesElement lg = log_left(exp_left(a, h).terms().front().exponent, h);
    CHECK(equal(lg, a));

    CHECK_THROWS_AS(exp_left(T(1), h), NotPurelyInfinite);
}

TEST_CASE("exp_full glues the three factors") {
    ExpConfig cfg;
    CHECK(equal(exp_full(SeriesElement::zero(), cfg), SeriesElement::one()));

    // no middle factor: exp(t^{g0} + t) = exp_L(t^{g0}) * exp_R(t)
    HahnElement g0 = cfg.h.apply(ChainPoint(0));
    SeriesElement x = series_add(SeriesElement::monomial(g0), T(1));
    SeriesElement glued = exp_full(x, cfg);
    SeriesElement expect = series_mul(exp_left(SeriesElement::monomial(g0), cfg.h),
                                      exp_right(T(1), cfg.right_cutoff));
    CHECK(series_sub(glued, expect).truncated_at(*expect.trunc()).is_zero());

    // homomorphism up to cutoff on a sampled pair
    SeriesElement y = series_add(SeriesElement::monomial(g0, Scalar(-2)),
                                 T(Rational(3, 2), Rational(1, 4)));
    SeriesElement d = series_sub(exp_full(series_add(x, y), cfg),
                                 series_mul(exp_full(x, cfg), exp_full(y, cfg)));
    REQUIRE(d.trunc());
    CHECK(d.truncated_at(*d.trunc()).is_zero());

    // middle factor: zero_only refuses constants, symbolic handles them
    SeriesElement with_c = series_add(x, SeriesElement::one());
    ExpConfig zero_only;
    zero_only.middle_mode = MiddleMode::ZeroOnly;
    CHECK_THROWS_AS(exp_full(with_c, zero_only), MiddleUnsupported);
    SeriesElement ec = exp_full(with_c, cfg);
    CHECK(series_sign(ec).is_positive());

    // log_full inverts exp_full up to cutoff, constants included
    SeriesElement z = log_full(ec, cfg);
    SeriesElement rt = series_sub(z, with_c);
    REQUIRE(rt.trunc());
    CHECK(rt.truncated_at(*rt.trunc()).is_zero());
}

TEST_CASE("growth axiom vs strength") {
    // strength-constrained: exp(x) dominates every power of x
    ExpConfig strong;
    HahnElement g = strong.h.apply(ChainPoint(0));
    std::vector<SeriesElement> probe = {SeriesElement::monomial(g, Scalar(Rational(1, 2)))};
    CheckReport ok = check_ga(strong, probe);
    CHECK(ok.ok());
    CHECK(ok.instances == strong.ga_max_n);

    // pinned non-strong at the class of v(x): witness reported
    ExpConfig pinned;
    pinned.h.pin(ChainPoint(0),
                 hahn_neg(HahnElement::monomial(ChainPoint(0))));
    HahnElement gbad = pinned.h.apply(ChainPoint(0));
    CheckReport bad = check_ga(
        pinned, {SeriesElement::monomial(gbad, Scalar(Rational(1, 2)))});
    CHECK(!bad.ok());
    CHECK(!bad.failures.empty());
    CHECK(bad.failures.front().contains("x"));

    CHECK_THROWS_AS(check_ga(strong, {T(1)}), NotPurelyInfinite);
}

TEST_CASE("v-compatibility") {
    ExpConfig cfg;
    CheckReport r = check_v_compatible(cfg, {T(1), T(Rational(1, 2), -3)});
    CHECK(r.ok());
    CHECK(r.instances == 3); // exp(1) check plus two infinitesimals

    ExpConfig zero_only;
    zero_only.middle_mode = MiddleMode::ZeroOnly;
    CHECK_THROWS_AS(check_v_compatible(zero_only, {}), MiddleUnsupported);
}

TEST_CASE("the assembled exponential induces h") {
    ExpConfig cfg;
    std::vector<HahnElement> samples = {
        HahnElement::monomial(ChainPoint(2), Scalar(5)),
        hahn_add(HahnElement::monomial(ChainPoint(-1), Scalar(-2)),
                 HahnElement::monomial(ChainPoint(3), Scalar(7)))};
    CheckReport r = check_induced_h(cfg, samples);
    CHECK(r.ok());
    CHECK_THROWS_AS(check_induced_h(cfg, {HahnElement::zero()}), NotPositive);
}

TEST_CASE("taylor partial-sum brackets") {
    auto [lo1, hi1] = taylor_bounds(1);
    CHECK(lo1 == 0);
    CHECK(hi1 == Rational(1, 2));
    auto [lo3, hi3] = taylor_bounds(3);
    CHECK(lo3 == Rational(1, 3));
    CHECK(hi3 == Rational(3, 8));
    // nesting
    auto [lo5, hi5] = taylor_bounds(5);
    CHECK(lo3 < lo5);
    CHECK(hi5 < hi3);
    CHECK_THROWS_AS(taylor_bounds(2), Error);
}
