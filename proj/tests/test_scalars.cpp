#include <doctest.h>

#include "hahnexp/errors.hpp"
#include "hahnexp/scalar.hpp"

using namespace hahnexp;

TEST_CASE("rational arithmetic folds exactly") {
    Scalar r = scalar_add(Scalar(Rational(1, 2)), Scalar(Rational(1, 3)));
    CHECK(r.is_rational());
    CHECK(r.rational() == Rational(5, 6));

    CHECK(scalar_mul(Scalar(Rational(2, 3)), Scalar(Rational(3, 2))).rational() == 1);
    CHECK(scalar_sub(Scalar(7), Scalar(7)).is_zero());
    CHECK_THROWS_AS(scalar_div(Scalar(1), Scalar(0)), DivisionByZero);
}

TEST_CASE("exp normalization") {
    Scalar e1 = scalar_exp(Scalar(1));
    Scalar em1 = scalar_exp(Scalar(-1));
    // exp(a) * exp(b) -> exp(a+b), exp(0) -> 1
    Scalar p = scalar_mul(e1, em1);
    CHECK(p.is_one());
    CHECK(scalar_div(e1, e1).is_one());
    // log(exp(a)) -> a
    CHECK(scalar_log(e1).rational() == 1);
    // (x*y)/x -> y
    Scalar m = scalar_mul(e1, Scalar(Rational(3, 4)));
    Scalar q = scalar_div(m, e1);
    CHECK(q.is_rational());
    CHECK(q.rational() == Rational(3, 4));
}

TEST_CASE("exp(1) - 1 refines into (1.7, 1.8)") {
    Scalar d = scalar_sub(scalar_exp(Scalar(1)), Scalar(1));
    Interval iv = d.refine(Rational(1, 100));
    CHECK(iv.lo > Rational(17, 10));
    CHECK(iv.hi < Rational(18, 10));
}

TEST_CASE("sign decisions") {
    CHECK(scalar_cmp(Scalar(Rational(1, 3)), Scalar(Rational(3, 8))).is_negative());
    CHECK(scalar_cmp(scalar_exp(Scalar(-1)), Scalar(Rational(1, 3))).is_positive());
    Scalar x = scalar_exp(Scalar(Rational(2, 5)));
    CHECK(scalar_cmp(x, x).is_zero());

    // root(2)^2 and 2 are equal but structurally distinct: refinement can
    // narrow, never separate, so the comparison reports Undecided
    Scalar r2 = scalar_nth_root(Scalar(2), 2);
    Scalar sq = scalar_mul(r2, r2);
    SignDecision d = scalar_cmp(sq, Scalar(2));
    CHECK(d.outcome == Sign::Undecided);
    CHECK(d.precision_reached <= scalar_config().cap_width);
}

TEST_CASE("nth roots") {
    CHECK(scalar_nth_root(Scalar(4), 2).rational() == 2);
    CHECK(scalar_nth_root(Scalar(Rational(8, 27)), 3).rational() == Rational(2, 3));
    CHECK_THROWS_AS(scalar_nth_root(Scalar(2), 2, ScalarMode::RationalOnly),
                    NotRepresentable);
    CHECK_THROWS_AS(scalar_nth_root(Scalar(-1), 2), NonPositiveRadicand);
    // symbolic mode: sqrt(2) lands between 1.41 and 1.42
    Interval iv = scalar_nth_root(Scalar(2), 2).refine(Rational(1, 1000));
    CHECK(iv.lo > Rational(141, 100));
    CHECK(iv.hi < Rational(142, 100));
}

TEST_CASE("exp_interval endpoints") {
    Interval at0 = exp_interval(0, Rational(1, 10));
    CHECK(at0.lo == 1);
    CHECK(at0.hi == 1);

    Interval atm1 = exp_interval(-1, Rational(1, 20));
    CHECK(atm1.lo > Rational(1, 3));
    CHECK(atm1.hi < Rational(3, 8));

    Interval at1 = exp_interval(1, Rational(1, 1000));
    CHECK(at1.lo < Rational(27183, 10000));
    CHECK(at1.hi > Rational(27182, 10000));
    CHECK(at1.width() <= Rational(1, 1000));

    Interval atm3 = exp_interval(-3, Rational(1, 1000));
    CHECK(atm3.lo > 0);
    CHECK(atm3.hi < Rational(1, 20)); // e^-3 ~ 0.0498
    CHECK(atm3.width() <= Rational(1, 1000));
}

TEST_CASE("log and root intervals") {
    Interval l = log_interval(2, Rational(1, 1000));
    CHECK(l.lo > Rational(693, 1001));
    CHECK(l.hi < Rational(694, 1000));
    Interval lh = log_interval(Rational(1, 2), Rational(1, 1000));
    CHECK(lh.hi < 0);
    CHECK(lh.lo > Rational(-694, 1000));
    Interval r = nth_root_interval(2, 2, Rational(1, 1000));
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
}

TEST_CASE("scalar text round trips") {
    for (const char* text : {"1/2", "-7", "(exp 1)", "(sub (exp 1) 1)", "(root 2 2)",
                             "(log 3)", "(div (exp 1) (root 3 5))"}) {
        Scalar s = parse_scalar(text);
        CHECK(scalar_to_string(s) == text);
        CHECK(s.structurally_equal(parse_scalar(scalar_to_string(s))));
    }
    CHECK_THROWS_AS(parse_scalar("(exp"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}
