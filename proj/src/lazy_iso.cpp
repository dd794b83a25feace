#include "hahnexp/lazy_iso.hpp"

namespace hahnexp {

namespace {

Rational max_of(std::initializer_list<Rational> xs) {
    Rational m = *xs.begin();
    for (const Rational& x : xs)
        if (x > m) m = x;
    return m;
}

Rational val_class(const HahnElement& g) {
    return hahn_valuation(g).point().value; // caller guarantees g != 0
}

} // namespace

HahnElement NegGroupPolicy::pick_forward(const ChainPoint& x, const Pin* lo,
                                         const Pin* hi) const {
    ChainPoint arg = back(x); // the exponential's argument point

    if (mode == GroupIsoMode::Diagonal) {
        // exactly non-strong wherever it fits: v_G(image) = argument point
        HahnElement cand = hahn_neg(HahnElement::monomial(arg));
        bool fits = (!lo || target_cmp(lo->target, cand) < 0) &&
                    (!hi || target_cmp(cand, hi->target) < 0);
        if (fits) return cand;
    }

    if (hi) {
        // perturb the upper neighbor downward by a fresh monomial whose
        // class clears every class in sight
        Rational mu = max_of({arg.value, val_class(hi->target),
                              lo ? val_class(lo->target) : arg.value,
                              lo ? val_class(hahn_sub(hi->target, lo->target))
                                 : arg.value}) +
                      1;
        return hahn_sub(hi->target, HahnElement::monomial(ChainPoint(mu)));
    }
    if (lo) {
        Rational mu = max_of({arg.value, val_class(lo->target)}) + 1;
        return hahn_neg(HahnElement::monomial(ChainPoint(mu)));
    }
    return hahn_neg(HahnElement::monomial(ChainPoint(arg.value + 1)));
}

ChainPoint NegGroupPolicy::pick_backward(const HahnElement& y, const Pin* lo,
                                         const Pin* hi) const {
    SignDecision s = hahn_sign(y);
    if (s.outcome == Sign::Undecided) throw UndecidedSign("sign of target undecided");
    if (s.outcome != Sign::Negative)
        throw NotNegative("backward query target must be a negative group element");
    ChainPoint vy = hahn_valuation(y).point();
    // the source bound below which the strength constraint is satisfiable
    ChainPoint bound = source_fwd ? source_fwd(vy) : vy;

    if (mode == GroupIsoMode::Diagonal) {
        bool fits = (!lo || lo->source < bound) && (!hi || bound < hi->source);
        if (fits) return bound; // back(bound) = v_G(y): exactly non-strong
    }

    bool strong = mode == GroupIsoMode::Strong;
    if (!lo && !hi) return ChainPoint(bound.value - 1);
    if (!lo) { // y below all pinned targets
        Rational upper = strong ? std::min(hi->source.value, bound.value)
                                : hi->source.value;
        return ChainPoint(upper - 1);
    }
    if (!hi) { // y above all pinned targets (closest to 0)
        if (strong) {
            if (!(lo->source < bound))
                throw ConstraintUnsatisfiable("no admissible source above " +
                                              rational_to_string(lo->source.value));
            return between(lo->source, bound);
        }
        return ChainPoint(lo->source.value + 1);
    }
    ChainPoint upper = strong && bound < hi->source ? bound : hi->source;
    if (!(lo->source < upper))
        throw ConstraintUnsatisfiable("no admissible source in the forced interval");
    return between(lo->source, upper);
}

bool NegGroupPolicy::admissible(const ChainPoint& s, const HahnElement& t) const {
    SignDecision d = hahn_sign(t);
    if (d.outcome != Sign::Negative) return false;
    if (mode != GroupIsoMode::Strong) return true;
    return back(s) < hahn_valuation(t).point();
}

} // namespace hahnexp
