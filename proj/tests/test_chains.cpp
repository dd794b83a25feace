#include <doctest.h>

#include "hahnexp/chain.hpp"
#include "hahnexp/errors.hpp"

using namespace hahnexp;

TEST_CASE("between is a density witness") {
    CHECK(between(ChainPoint(0), ChainPoint(1)).value == Rational(1, 2));
    CHECK(between(ChainPoint(-1), ChainPoint(Rational(-1, 2))).value == Rational(-3, 4));
    CHECK_THROWS_AS(between(ChainPoint(1), ChainPoint(0)), EmptyInterval);
    CHECK_THROWS_AS(between(ChainPoint(2), ChainPoint(2)), EmptyInterval);
}

TEST_CASE("piecewise-linear automorphisms") {
    PLAutomorphism id;
    CHECK(id.is_identity());
    CHECK(id.apply(ChainPoint(3)).value == 3);

    PLAutomorphism sh = PLAutomorphism::shift(1);
    CHECK(sh.apply(ChainPoint(3)).value == 4);
    CHECK(sh.apply_inverse(ChainPoint(4)).value == 3);

    // slope 2 above 0, identity below
    PLAutomorphism kink({Rational(0)}, {Rational(1), Rational(2)}, Rational(0));
    CHECK(kink.apply(ChainPoint(-5)).value == -5);
    CHECK(kink.apply(ChainPoint(3)).value == 6);
    CHECK(kink.apply(ChainPoint(Rational(1, 2))).value == 1);
    CHECK(kink.apply_inverse(ChainPoint(6)).value == 3);
    CHECK(kink.apply_inverse(ChainPoint(-5)).value == -5);
}

TEST_CASE("inverse and composition") {
    PLAutomorphism f({Rational(-1), Rational(2)},
                     {Rational(1, 2), Rational(3), Rational(1)}, Rational(5));
    PLAutomorphism finv = f.inverse();
    for (long x = -4; x <= 4; ++x) {
        ChainPoint p(x);
        CHECK(finv.apply(f.apply(p)) == p);
        CHECK(f.apply_inverse(f.apply(p)) == p);
    }
    PLAutomorphism g = PLAutomorphism::shift(Rational(-3, 2));
    PLAutomorphism fg = f.compose(g);
    for (long x = -4; x <= 4; ++x) {
        ChainPoint p(x);
        CHECK(fg.apply(p) == f.apply(g.apply(p)));
    }
    CHECK(f.compose(finv).is_identity());
}

TEST_CASE("automorphisms preserve order") {
    PLAutomorphism f({Rational(0)}, {Rational(2), Rational(1, 3)}, Rational(-1));
    Rational prev;
    bool first = true;
    for (long x = -6; x <= 6; ++x) {
        Rational y = f.apply(ChainPoint(Rational(x, 2))).value;
        if (!first) CHECK(prev < y);
        prev = y;
        first = false;
    }
}

TEST_CASE("invalid pieces are rejected") {
    CHECK_THROWS_AS(PLAutomorphism({Rational(0)}, {Rational(1), Rational(-2)},
                                   Rational(0)),
                    Error);
    CHECK_THROWS_AS(PLAutomorphism({Rational(1), Rational(0)},
                                   {Rational(1), Rational(1), Rational(1)}, Rational(0)),
                    Error);
}
