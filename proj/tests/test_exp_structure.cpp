#include <doctest.h>

#include "hahnexp/exp_structure.hpp"

using namespace hahnexp;

namespace {

HahnElement E(long idx, const Rational& c = 1) {
    return HahnElement::monomial(ChainPoint(idx), Scalar(c));
}

} // namespace

TEST_CASE("lazy chain isomorphism basics") {
    GroupExponential h(GroupIsoMode::Strong);
    HahnElement g0 = h.apply(ChainPoint(0));
    CHECK(hahn_cmp(h.apply(ChainPoint(0)), g0).is_zero()); // memoized
    CHECK(h.apply_inverse(g0) == ChainPoint(0));

    // order preservation across fresh queries, and the strong constraint
    for (long x = -3; x <= 3; ++x) h.apply(ChainPoint(x));
    auto pins = h.snapshot();
    for (size_t i = 0; i < pins.size(); ++i) {
        CHECK(hahn_valuation(pins[i].target).point() > pins[i].source);
        if (i) {
            CHECK(pins[i - 1].source < pins[i].source);
            CHECK(hahn_cmp(pins[i - 1].target, pins[i].target).is_negative());
        }
    }
}

TEST_CASE("backward queries extend the memo consistently") {
    GroupExponential h(GroupIsoMode::Strong);
    HahnElement y = hahn_add(E(2, -3), E(5));
    ChainPoint x = h.apply_inverse(y);
    CHECK(hahn_cmp(h.apply(x), y).is_zero());
    CHECK(x < ChainPoint(2)); // strong: v_G(h(x)) = 2 > x
    CHECK_THROWS_AS(h.apply_inverse(E(0)), NotNegative);
}

TEST_CASE("pins are order-checked but not strength-checked") {
    GroupExponential h(GroupIsoMode::Strong);
    h.pin(ChainPoint(0), E(0, -1)); // v_G = 0: deliberately non-strong
    CHECK(hahn_cmp(h.apply(ChainPoint(0)), E(0, -1)).is_zero());
    CHECK_THROWS_AS(h.pin(ChainPoint(0), E(0, -2)), ConstraintUnsatisfiable);
    CHECK_THROWS_AS(h.pin(ChainPoint(1), E(0, -3)), ConstraintUnsatisfiable);
    CHECK_THROWS_AS(h.pin(ChainPoint(2), E(4)), NotNegative);
}

TEST_CASE("check_strong") {
    GroupExponential good(GroupIsoMode::Strong);
    CheckReport pass = check_strong(good, {E(0, -1)});
    CHECK(pass.ok());
    CHECK(pass.instances == 1);

    GroupExponential bad(GroupIsoMode::Strong);
    bad.pin(ChainPoint(0), E(0, -1));
    CheckReport fail = check_strong(bad, {E(0, Rational(-1, 2))});
    CHECK(!fail.ok());
    REQUIRE(fail.failures.size() == 1);
    CHECK(fail.failures[0].contains("g"));

    CheckReport vacuous = check_strong(good, {});
    CHECK(vacuous.ok());
    CHECK(vacuous.instances == 0);
}

TEST_CASE("diagonal mode is non-strong on every fresh class") {
    GroupExponential h(GroupIsoMode::Diagonal);
    std::vector<HahnElement> images;
    for (long x : {1L, -2L, 0L, 3L}) images.push_back(h.apply(ChainPoint(x)));
    CheckReport r = check_strong(h, images);
    CHECK(r.failures.size() == images.size());
}

TEST_CASE("chi from h: odd extension of h after the valuation") {
    GroupExponential h(GroupIsoMode::Strong);
    Contraction chi = chi_from_h(h);
    CHECK(chi_apply(chi, HahnElement::zero()).is_zero());

    HahnElement g = hahn_add(E(1, -5), E(4, 2));
    HahnElement img = chi_apply(chi, g);
    CHECK(hahn_cmp(img, h.apply(ChainPoint(1))).is_zero());
    CHECK(hahn_cmp(chi_apply(chi, hahn_neg(g)), hahn_neg(img)).is_zero());
}

TEST_CASE("contraction axioms") {
    GroupExponential h(GroupIsoMode::Strong);
    Contraction chi = chi_from_h(h);
    std::vector<HahnElement> sample = {E(0, -1), E(0, -3), E(1, 2), E(2, -1),
                                       HahnElement::zero()};
    CHECK(check_contraction_axioms(chi, sample).ok());

    // the identity map fails class-sign constancy on e_0 vs 2 e_0
    Contraction ident{[](const HahnElement& x) { return x; }, nullptr, "identity"};
    CheckReport r = check_contraction_axioms(ident, {E(0), E(0, 2)});
    CHECK(!r.ok());

    // the zero map fails "chi(x) = 0 iff x = 0"
    Contraction zero{[](const HahnElement&) { return HahnElement::zero(); }, nullptr,
                     "zero"};
    CHECK(!check_contraction_axioms(zero, {E(0)}).ok());
}

TEST_CASE("centripetal directions") {
    GroupExponential strong(GroupIsoMode::Strong);
    Contraction chi = chi_from_h(strong);
    std::vector<HahnElement> sample = {E(0, -2), E(1, 3)};
    CHECK(check_centripetal(chi, sample, CentripetalDirection::LemmaConsistent).ok());
    CHECK(!check_centripetal(chi, sample, CentripetalDirection::PaperLiteral).ok());

    GroupExponential pinned(GroupIsoMode::Strong);
    pinned.pin(ChainPoint(0), E(0, -1));
    Contraction chi2 = chi_from_h(pinned);
    // same class, larger magnitude: |chi(x)| = |e_0| is not < |x|... x = -1/2 e_0
    CheckReport r = check_centripetal(chi2, {E(0, Rational(-1, 2))},
                                      CentripetalDirection::LemmaConsistent);
    CHECK(!r.ok());
}

TEST_CASE("induced exponential from the contraction") {
    GroupExponential h(GroupIsoMode::Strong);
    Contraction chi = chi_from_h(h);
    std::vector<HahnElement> sample = {E(0, -1), E(0, -2), E(3, -1),
                                       hahn_add(E(3, -4), E(7))};
    InducedExponentialTable table = h_from_chi(chi, sample);
    REQUIRE(table.pins.size() == 2); // classes 0 and 3
    for (const auto& [cls, img] : table.pins)
        CHECK(hahn_cmp(img, h.apply(cls)).is_zero());

    // class-constancy violation -> NotWellDefined
    Contraction wobble{[](const HahnElement& x) { return hahn_scalar_mul(Scalar(Rational(1, 2)), x); },
                       nullptr, "half"};
    CHECK_THROWS_AS(h_from_chi(wobble, {E(0, -1), E(0, -2)}), Error);

    CHECK(h_from_chi(chi, {}).pins.empty());
}

TEST_CASE("lifting chain automorphisms to the group") {
    HahnElement s = hahn_add(E(0, 3), E(1));
    CHECK(hahn_cmp(lift_chain_automorphism(PLAutomorphism::identity(), s), s).is_zero());

    HahnElement ts = lift_chain_automorphism(PLAutomorphism::shift(1), s);
    CHECK(hahn_cmp(ts, hahn_add(E(1, 3), E(2))).is_zero());
    // tau~ = sigma: the lift induces exactly sigma on valuations
    CHECK(hahn_valuation(ts).point() == ChainPoint(1));
}
