#include <doctest.h>

#include "hahnexp/errors.hpp"
#include "hahnexp/hahn.hpp"

using namespace hahnexp;

namespace {

HahnElement E(long idx, const Rational& c = 1) {
    return HahnElement::monomial(ChainPoint(idx), Scalar(c));
}

} // namespace

TEST_CASE("group arithmetic") {
    CHECK(hahn_add(E(0), hahn_neg(E(0))).is_zero());
    HahnElement r = hahn_add(hahn_add(E(0, 2), E(1)), E(0, -2));
    CHECK(r.support_size() == 1);
    CHECK(hahn_cmp(r, E(1)).is_zero());

    CHECK(hahn_cmp(hahn_divide_by_n(E(0, 3), 3), E(0)).is_zero());
    HahnElement half = hahn_divide_by_n(E(2), 2);
    CHECK(hahn_cmp(hahn_int_mul(half, 2), E(2)).is_zero());
    CHECK(hahn_cmp(hahn_scalar_mul(Scalar(Rational(1, 2)), E(2)), half).is_zero());
}

TEST_CASE("lexicographic order from the smallest index") {
    CHECK(hahn_cmp(E(0), E(1, 100)).is_positive());
    CHECK(hahn_sign(hahn_add(E(0, -1), E(2, 50))).is_negative());
    HahnElement a = hahn_add(E(0, 2), E(3, -7));
    CHECK(hahn_cmp(a, a).is_zero());
    CHECK(hahn_cmp(hahn_abs(hahn_neg(a)), a).is_zero());
}

TEST_CASE("natural valuation is min supp") {
    CHECK(hahn_valuation(hahn_add(E(2), E(7, 5))).point() == ChainPoint(2));
    CHECK(hahn_valuation(HahnElement::zero()).is_infinity());
    HahnElement c = hahn_sub(hahn_add(E(0), E(1)), E(0));
    CHECK(hahn_valuation(c).point() == ChainPoint(1));
}

TEST_CASE("archimedean component residue") {
    HahnElement a = hahn_add(E(2, 3), E(7, 5));
    CHECK(component_residue(a, ChainPoint(2)).rational() == 3);
    CHECK(component_residue(E(7, 5), ChainPoint(2)).is_zero());
    CHECK_THROWS_AS(component_residue(E(2, 3), ChainPoint(7)), NotInComponentDomain);
}

TEST_CASE("pseudo limit of a strictly telescoping sequence") {
    // a_n = sum_{k<=n} e_k, n = 0..3
    std::vector<HahnElement> seq;
    HahnElement acc;
    for (long n = 0; n <= 3; ++n) {
        acc = hahn_add(acc, E(n));
        seq.push_back(acc);
    }
    PseudoLimitReport r = pseudo_limit(seq);
    CHECK(r.all_ok());
    REQUIRE(r.rows.size() == 3);
    for (size_t rho = 0; rho < r.rows.size(); ++rho) {
        CHECK(r.rows[rho].v_to_limit.point() == ChainPoint(static_cast<long>(rho) + 1));
        CHECK(r.rows[rho].v_consecutive.point() == ChainPoint(static_cast<long>(rho) + 1));
    }
    // the representative extends the last term at a fresh higher index
    CHECK(hahn_cmp(r.limit, seq.back()).is_positive());
}

TEST_CASE("non-pseudo-Cauchy sequences are rejected") {
    HahnElement a = hahn_add(E(0), E(1, 2));
    CHECK_THROWS_AS(pseudo_limit({a, a, a}), NotPseudoCauchy);

    // a_n = (1 - 2^-n) e_0: all difference valuations equal 0
    std::vector<HahnElement> seq;
    for (long n = 0; n <= 3; ++n)
        seq.push_back(E(0, Rational(1) - rational_pow(Rational(1, 2), n)));
    CHECK_THROWS_AS(pseudo_limit(seq), NotPseudoCauchy);

    CHECK_THROWS_AS(pseudo_limit({E(0), E(1)}), NotPseudoCauchy); // too short
}
