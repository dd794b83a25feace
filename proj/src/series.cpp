#include "hahnexp/series.hpp"

#include <algorithm>

#include "hahnexp/errors.hpp"

namespace hahnexp {

namespace {

constexpr unsigned kMaxExpansionSteps = 512;

// minimum of two exponents
HahnElement exp_min(const HahnElement& a, const HahnElement& b) {
    return exponent_less(a, b) ? a : b;
}

std::optional<HahnElement> trunc_min(const std::optional<HahnElement>& a,
                                     const std::optional<HahnElement>& b) {
    if (!a) return b;
    if (!b) return a;
    return exp_min(*a, *b);
}

} // namespace

bool exponent_less(const HahnElement& a, const HahnElement& b) {
    SignDecision d = hahn_cmp(a, b);
    if (d.outcome == Sign::Undecided)
        throw UndecidedSign("exponent order undecided at precision cap");
    return d.outcome == Sign::Negative;
}

bool exponent_equal(const HahnElement& a, const HahnElement& b) {
    SignDecision d = hahn_cmp(a, b);
    if (d.outcome == Sign::Undecided)
        throw UndecidedSign("exponent equality undecided at precision cap");
    return d.outcome == Sign::Zero;
}

SeriesElement::SeriesElement(std::vector<Term> terms, std::optional<HahnElement> trunc)
    : trunc_(std::move(trunc)) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return exponent_less(x.exponent, y.exponent);
    });
    for (auto& t : terms) {
        if (!terms_.empty() && exponent_equal(terms_.back().exponent, t.exponent)) {
            terms_.back().coeff = scalar_add(terms_.back().coeff, t.coeff);
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

SeriesElement SeriesElement::constant(Scalar c) {
    return monomial(HahnElement::zero(), std::move(c));
}

SeriesElement SeriesElement::monomial(HahnElement g, Scalar c) {
    if (c.is_zero()) return zero();
    SeriesElement s;
    s.terms_.push_back({std::move(g), std::move(c)});
    return s;
}

SeriesElement SeriesElement::with_trunc(std::optional<HahnElement> trunc) const {
    SeriesElement s = *this;
    s.trunc_ = std::move(trunc);
    return s;
}

SeriesElement SeriesElement::truncated_at(const HahnElement& cutoff) const {
    SeriesElement s;
    for (const Term& t : terms_)
        if (exponent_less(t.exponent, cutoff)) s.terms_.push_back(t);
    s.trunc_ = cutoff;
    return s;
}

std::string SeriesElement::to_string() const {
    std::string out = terms_.empty() ? "0" : "";
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += scalar_to_string(terms_[i].coeff) + "*t^(" + terms_[i].exponent.to_string() +
               ")";
    }
    if (trunc_) out += " [exact below " + trunc_->to_string() + "]";
    return out;
}

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b) {
    std::vector<SeriesElement::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (exponent_less(ia->exponent, ib->exponent)) {
            out.push_back(*ia++);
        } else if (exponent_less(ib->exponent, ia->exponent)) {
            out.push_back(*ib++);
        } else {
            Scalar c = scalar_add(ia->coeff, ib->coeff);
            if (!c.is_zero()) out.push_back({ia->exponent, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.terms().end());
    out.insert(out.end(), ib, b.terms().end());
    SeriesElement r(std::move(out), trunc_min(a.trunc(), b.trunc()));
    if (r.trunc()) return r.truncated_at(*r.trunc());
    return r;
}

SeriesElement series_neg(const SeriesElement& a) {
    std::vector<SeriesElement::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.exponent, scalar_neg(t.coeff)});
    return SeriesElement(std::move(out), a.trunc());
}

SeriesElement series_sub(const SeriesElement& a, const SeriesElement& b) {
    return series_add(a, series_neg(b));
}

SeriesElement series_scalar_mul(const Scalar& c, const SeriesElement& a) {
    if (c.is_zero()) return SeriesElement::zero().with_trunc(a.trunc());
    std::vector<SeriesElement::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.exponent, scalar_mul(c, t.coeff)});
    return SeriesElement(std::move(out), a.trunc());
}

SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b) {
    std::vector<SeriesElement::Term> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out.push_back({hahn_add(ta.exponent, tb.exponent),
                           scalar_mul(ta.coeff, tb.coeff)});
    // certificate shifts by the other factor's valuation
    std::optional<HahnElement> trunc;
    if (a.trunc() && !b.is_zero())
        trunc = trunc_min(trunc, hahn_add(*a.trunc(), series_valuation(b).exponent()));
    if (b.trunc() && !a.is_zero())
        trunc = trunc_min(trunc, hahn_add(*b.trunc(), series_valuation(a).exponent()));
    if (a.trunc() && b.is_zero()) trunc = a.trunc();
    if (b.trunc() && a.is_zero()) trunc = trunc_min(trunc, b.trunc());
    SeriesElement r(std::move(out), trunc);
    if (r.trunc()) return r.truncated_at(*r.trunc());
    return r;
}

SeriesValuation series_valuation(const SeriesElement& a) {
    if (a.is_zero()) return SeriesValuation{};
    return SeriesValuation{a.terms().front().exponent};
}

SignDecision series_sign(const SeriesElement& a) {
    if (a.is_zero()) return decide(0);
    return scalar_sign(a.terms().front().coeff);
}

SignDecision series_cmp(const SeriesElement& a, const SeriesElement& b) {
    return series_sign(series_sub(a, b));
}

Scalar series_residue(const SeriesElement& a) {
    HahnElement zero_exp = HahnElement::zero();
    for (const auto& t : a.terms()) {
        SignDecision d = hahn_cmp(t.exponent, zero_exp);
        if (d.outcome == Sign::Negative)
            throw NotInValuationRing("series has a term of negative exponent");
        if (d.outcome == Sign::Zero) return t.coeff;
        if (d.outcome == Sign::Undecided)
            throw UndecidedSign("exponent sign undecided");
        break; // terms sorted: the first non-negative exponent decides
    }
    return Scalar(0);
}

AdditiveDecomposition additive_decompose(const SeriesElement& a) {
    AdditiveDecomposition d;
    d.constant = Scalar(0);
    std::vector<SeriesElement::Term> inf, eps;
    for (const auto& t : a.terms()) {
        SignDecision s = hahn_sign(t.exponent);
        switch (s.outcome) {
        case Sign::Negative: inf.push_back(t); break;
        case Sign::Zero: d.constant = t.coeff; break;
        case Sign::Positive: eps.push_back(t); break;
        case Sign::Undecided: throw UndecidedSign("exponent sign undecided");
        }
    }
    d.infinite_part = SeriesElement(std::move(inf));
    d.infinitesimal = SeriesElement(std::move(eps), a.trunc());
    return d;
}

MultiplicativeDecomposition multiplicative_decompose(const SeriesElement& a) {
    SignDecision s = series_sign(a);
    if (s.outcome == Sign::Undecided) throw UndecidedSign("series sign undecided");
    if (s.outcome != Sign::Positive) throw NotPositive("multiplicative_decompose needs a > 0");
    MultiplicativeDecomposition d;
    d.monomial_exponent = a.terms().front().exponent;
    d.unit_constant = a.terms().front().coeff;
    // divide exactly by the leading monomial
    std::vector<SeriesElement::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms())
        out.push_back({hahn_sub(t.exponent, d.monomial_exponent),
                       scalar_div(t.coeff, d.unit_constant)});
    std::optional<HahnElement> trunc;
    if (a.trunc()) trunc = hahn_sub(*a.trunc(), d.monomial_exponent);
    d.one_plus_eps = SeriesElement(std::move(out), std::move(trunc));
    return d;
}

namespace {

// Powers of an infinitesimal, pruned below a cutoff; calls fn(k, eps^k).
// Stops when the pruned power vanishes; throws CutoffUnreachable if the
// expansion cannot pass the cutoff in kMaxExpansionSteps steps.
template <typename Fn>
void expand_powers(const SeriesElement& eps, const HahnElement& cutoff, Fn&& fn) {
    SeriesElement power = SeriesElement::one();
    for (unsigned k = 1; k <= kMaxExpansionSteps; ++k) {
        power = series_mul(power, eps).with_trunc(std::nullopt).truncated_at(cutoff)
                    .with_trunc(std::nullopt);
        if (power.is_zero()) return;
        fn(k, power);
    }
    throw CutoffUnreachable("series expansion did not pass the cutoff in " +
                            std::to_string(kMaxExpansionSteps) + " steps");
}

} // namespace

SeriesElement series_invert(const SeriesElement& a, const HahnElement& cutoff) {
    if (a.is_zero()) throw DivisionByZero("invert(0)");
    const HahnElement& w = a.terms().front().exponent;
    const Scalar& c = a.terms().front().coeff;
    SignDecision cs = scalar_sign(c);
    if (cs.outcome == Sign::Undecided)
        throw UndecidedSign("leading coefficient indistinguishable from 0");

    // a = c * t^w * (1 + eps)
    std::vector<SeriesElement::Term> eps_terms;
    for (size_t i = 1; i < a.terms().size(); ++i)
        eps_terms.push_back({hahn_sub(a.terms()[i].exponent, w),
                             scalar_div(a.terms()[i].coeff, c)});
    SeriesElement eps(std::move(eps_terms));

    // result = c^{-1} t^{-w} * sum (-eps)^k, keeping result exponents < cutoff
    HahnElement m = hahn_add(cutoff, w); // S-part cutoff
    if (hahn_sign(m).outcome != Sign::Positive)
        return SeriesElement::zero().with_trunc(cutoff);
    SeriesElement s = SeriesElement::one();
    if (!eps.is_zero()) {
        expand_powers(eps, m, [&](unsigned k, const SeriesElement& pw) {
            s = series_add(s, k % 2 ? series_neg(pw) : pw);
        });
        s = s.truncated_at(m).with_trunc(std::nullopt);
    }
    SeriesElement r = series_mul(
        SeriesElement::monomial(hahn_neg(w), scalar_div(Scalar(1), c)), s);
    return r.with_trunc(cutoff);
}

SeriesElement series_nth_root_positive(const SeriesElement& a, unsigned n,
                                       const HahnElement& cutoff, ScalarMode mode) {
    SignDecision s = series_sign(a);
    if (s.outcome == Sign::Undecided) throw UndecidedSign("series sign undecided");
    if (s.outcome != Sign::Positive) throw NotPositive("nth_root_positive needs a > 0");
    if (n == 0) throw Error("InvalidDegree", "0th root");

    MultiplicativeDecomposition d = multiplicative_decompose(a);
    Scalar croot = scalar_nth_root(d.unit_constant, n, mode);
    HahnElement wn = hahn_divide_by_n(d.monomial_exponent, n);

    SeriesElement eps = series_sub(d.one_plus_eps.with_trunc(std::nullopt),
                                   SeriesElement::one());
    // binomial series (1+eps)^{1/n}, keeping result exponents < cutoff
    HahnElement m = hahn_sub(cutoff, wn);
    if (hahn_sign(m).outcome != Sign::Positive)
        return SeriesElement::zero().with_trunc(cutoff);
    SeriesElement sum = SeriesElement::one();
    if (!eps.is_zero()) {
        Rational alpha(1, n);
        Rational coeff = 1; // binom(1/n, k)
        expand_powers(eps, m, [&](unsigned k, const SeriesElement& pw) {
            coeff = coeff * (alpha - Rational(k - 1)) / Rational(k);
            sum = series_add(sum, series_scalar_mul(Scalar(coeff), pw));
        });
        sum = sum.truncated_at(m).with_trunc(std::nullopt);
    }
    SeriesElement r = series_mul(SeriesElement::monomial(std::move(wn), croot), sum);
    return r.with_trunc(cutoff);
}

SeriesElement formal_derivative(const SeriesElement& a) {
    // locate the common single index mu of all exponents
    std::optional<ChainPoint> mu;
    auto rational_degree = [&](const HahnElement& g) -> Rational {
        if (g.is_zero()) return 0;
        if (g.support_size() != 1)
            throw NonRationalExponents("exponent has more than one support point");
        const auto& term = g.terms().front();
        if (!term.coeff.is_rational())
            throw NonRationalExponents("exponent coefficient is symbolic");
        if (mu && !(term.idx == *mu))
            throw NonRationalExponents("exponents use different chain indices");
        mu = term.idx;
        return term.coeff.rational();
    };

    std::vector<SeriesElement::Term> out;
    std::vector<std::pair<Rational, Scalar>> degs;
    for (const auto& t : a.terms())
        degs.emplace_back(rational_degree(t.exponent), t.coeff);
    std::optional<Rational> trunc_deg;
    if (a.trunc()) trunc_deg = rational_degree(*a.trunc());

    ChainPoint idx = mu.value_or(ChainPoint(0));
    for (auto& [q, c] : degs) {
        if (q == 0) continue; // constants vanish
        out.push_back({HahnElement::monomial(idx, Scalar(q - 1)),
                       scalar_mul(Scalar(q), c)});
    }
    std::optional<HahnElement> trunc;
    if (trunc_deg) trunc = HahnElement::monomial(idx, Scalar(*trunc_deg - 1));
    return SeriesElement(std::move(out), std::move(trunc));
}

} // namespace hahnexp
