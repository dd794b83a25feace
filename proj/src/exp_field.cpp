#include "hahnexp/exp_field.hpp"

#include "hahnexp/errors.hpp"
#include "hahnexp/json_io.hpp"

namespace hahnexp {

ExpConfig::ExpConfig()
    : right_cutoff(HahnElement::monomial(ChainPoint(0), Scalar(8))) {}

void ExpConfig::validate() const {
    if (hahn_sign(right_cutoff).outcome != Sign::Positive)
        throw Error("InvalidConfig", "right_cutoff must be positive");
    if (ga_max_n < 1) throw Error("InvalidConfig", "ga_max_n must be >= 1");
}

namespace {

constexpr unsigned kMaxTaylorSteps = 512;

// sum_k coeff(k) * eps^k with eps infinitesimal, pruned at cutoff
SeriesElement taylor_sum(const SeriesElement& eps, const HahnElement& cutoff,
                         const std::function<Rational(unsigned)>& coeff) {
    SeriesElement sum = SeriesElement::one();
    SeriesElement power = SeriesElement::one();
    for (unsigned k = 1; k <= kMaxTaylorSteps; ++k) {
        power = series_mul(power, eps).truncated_at(cutoff).with_trunc(std::nullopt);
        if (power.is_zero())
            return sum.truncated_at(cutoff);
        sum = series_add(sum, series_scalar_mul(Scalar(coeff(k)), power));
    }
    throw CutoffUnreachable("Taylor expansion did not pass the cutoff");
}

} // namespace

SeriesElement exp_right(const SeriesElement& eps, const HahnElement& cutoff) {
    if (!eps.is_zero()) {
        SignDecision v = hahn_sign(series_valuation(eps).exponent());
        if (v.outcome != Sign::Positive)
            throw NotInfinitesimal("exp_right argument must have positive valuation");
    }
    if (eps.is_zero()) return SeriesElement::one();
    Rational fact = 1;
    return taylor_sum(eps, cutoff, [&fact](unsigned k) {
        fact *= k;
        return Rational(1) / Rational(fact);
    });
}

SeriesElement log_right(const SeriesElement& u, const HahnElement& cutoff) {
    SeriesElement eps = series_sub(u.with_trunc(std::nullopt), SeriesElement::one());
    if (!eps.is_zero()) {
        SignDecision v = hahn_sign(series_valuation(eps).exponent());
        if (v.outcome != Sign::Positive)
            throw NotOnePlusInfinitesimal("log_right argument must be 1 + infinitesimal");
    }
    if (eps.is_zero()) return SeriesElement::zero();
    // Mercator: eps - eps^2/2 + eps^3/3 - ...
    SeriesElement sum = taylor_sum(eps, cutoff, [](unsigned k) {
        return k % 2 ? Rational(1) / Rational(k) : Rational(-1) / Rational(k);
    });
    return series_sub(sum, SeriesElement::one()); // taylor_sum starts at 1
}

SeriesElement exp_left(const SeriesElement& a, GroupExponential& h) {
    std::vector<HahnElement::Term> l_terms;
    for (const auto& t : a.terms()) {
        SignDecision s = hahn_sign(t.exponent);
        if (s.outcome != Sign::Negative)
            throw NotPurelyInfinite("exp_left argument must have negative support");
        l_terms.push_back({h.apply_inverse(t.exponent), t.coeff});
    }
    HahnElement l(std::move(l_terms));
    return SeriesElement::monomial(hahn_neg(l));
}

SeriesElement log_left(const HahnElement& monomial_exponent, GroupExponential& h) {
    HahnElement l = hahn_neg(monomial_exponent);
    std::vector<SeriesElement::Term> out;
    for (const auto& t : l.terms())
        out.push_back({h.apply(t.idx), t.coeff});
    return SeriesElement(std::move(out));
}

SeriesElement exp_full(const SeriesElement& x, ExpConfig& cfg) {
    cfg.validate();
    AdditiveDecomposition d = additive_decompose(x);
    SeriesElement result = exp_left(d.infinite_part, cfg.h);
    if (!d.constant.is_zero()) {
        if (cfg.middle_mode == MiddleMode::ZeroOnly)
            throw MiddleUnsupported("nonzero constant part in zero_only middle mode");
        result = series_scalar_mul(scalar_exp(d.constant), result);
    }
    return series_mul(result, exp_right(d.infinitesimal, cfg.right_cutoff));
}

SeriesElement log_full(const SeriesElement& u, ExpConfig& cfg) {
    cfg.validate();
    MultiplicativeDecomposition d = multiplicative_decompose(u);
    SeriesElement result = log_left(d.monomial_exponent, cfg.h);
    SignDecision c_is_one = scalar_cmp(d.unit_constant, Scalar(1));
    if (c_is_one.outcome != Sign::Zero) {
        if (cfg.middle_mode == MiddleMode::ZeroOnly)
            throw MiddleUnsupported("non-unit constant factor in zero_only middle mode");
        result = series_add(result, SeriesElement::constant(scalar_log(d.unit_constant)));
    }
    return series_add(result, log_right(d.one_plus_eps, cfg.right_cutoff));
}

CheckReport check_ga(ExpConfig& cfg, const std::vector<SeriesElement>& samples) {
    cfg.validate();
    CheckReport report;
    report.check = "ga";
    report.config["max_n"] = cfg.ga_max_n;
    for (const SeriesElement& x : samples) {
        SignDecision pos = series_sign(x);
        if (pos.outcome != Sign::Positive || series_valuation(x).is_infinity() ||
            hahn_sign(series_valuation(x).exponent()).outcome != Sign::Negative)
            throw NotPurelyInfinite("GA samples must be positive and purely infinite");
        SeriesElement ex = exp_full(x, cfg);
        SeriesElement power = SeriesElement::one();
        for (unsigned n = 1; n <= cfg.ga_max_n; ++n) {
            power = series_mul(power, x);
            // antecedent x >= n^2 holds automatically for infinite positive x,
            // but check it anyway so arbitrary samples are honored
            SignDecision ante = series_cmp(
                x, SeriesElement::constant(Scalar(Rational(n) * Rational(n))));
            if (ante.outcome == Sign::Negative) {
                report.pass(); // vacuous
                continue;
            }
            SignDecision d = series_cmp(ex, power);
            if (d.outcome == Sign::Undecided)
                report.undecide();
            else if (d.outcome == Sign::Positive)
                report.pass();
            else
                report.fail({{"x", series_to_json(x)},
                             {"n", n},
                             {"exp_x", series_to_json(ex)},
                             {"violated", "exp(x) > x^n"}});
        }
    }
    return report;
}

CheckReport check_v_compatible(ExpConfig& cfg,
                               const std::vector<SeriesElement>& infinitesimals) {
    cfg.validate();
    if (cfg.middle_mode != MiddleMode::Symbolic)
        throw MiddleUnsupported("v-compatibility needs the symbolic middle exponential");
    CheckReport report;
    report.check = "vcompat";

    // v(exp(1) - 1) = 0: the scalar exp(1) - 1 must be a nonzero unit
    SeriesElement e1 = exp_full(SeriesElement::one(), cfg);
    SeriesElement diff = series_sub(e1, SeriesElement::one());
    SeriesValuation v = series_valuation(diff);
    if (!v.is_infinity() && hahn_sign(v.exponent()).outcome == Sign::Zero &&
        scalar_sign(diff.terms().front().coeff).decided())
        report.pass();
    else
        report.fail({{"violated", "v(exp(1) - 1) = 0"},
                     {"exp_1", series_to_json(e1)}});

    for (const SeriesElement& eps : infinitesimals) {
        if (!eps.is_zero() &&
            hahn_sign(series_valuation(eps).exponent()).outcome != Sign::Positive)
            throw NotInfinitesimal("vcompat samples must be infinitesimal");
        SeriesElement u = exp_full(eps, cfg);
        SeriesElement tail = series_sub(u, SeriesElement::one());
        bool ok = tail.is_zero() ||
                  hahn_sign(series_valuation(tail).exponent()).outcome == Sign::Positive;
        if (ok)
            report.pass();
        else
            report.fail({{"violated", "exp(I_v) subset 1 + I_v"},
                         {"eps", series_to_json(eps)},
                         {"exp_eps", series_to_json(u)}});
    }
    return report;
}

CheckReport check_induced_h(ExpConfig& cfg, const std::vector<HahnElement>& samples) {
    cfg.validate();
    CheckReport report;
    report.check = "induced-h";
    for (const HahnElement& g : samples) {
        if (g.is_zero()) throw NotPositive("induced-h samples must be nonzero");
        // h_exp~(g) = sum over support of g of g(gamma) t^{h(gamma)}
        std::vector<SeriesElement::Term> terms;
        for (const auto& t : g.terms())
            terms.push_back({cfg.h.apply(t.idx), t.coeff});
        SeriesElement htilde(std::move(terms));
        HahnElement v = series_valuation(htilde).exponent();
        HahnElement expected = cfg.h.apply(hahn_valuation(g).point());
        SignDecision d = hahn_cmp(v, expected);
        if (d.outcome == Sign::Undecided)
            report.undecide();
        else if (d.outcome == Sign::Zero)
            report.pass();
        else
            report.fail({{"g", hahn_to_json(g)},
                         {"v_htilde", hahn_to_json(v)},
                         {"h_of_class", hahn_to_json(expected)}});
    }
    return report;
}

std::pair<Rational, Rational> taylor_bounds(unsigned n) {
    if (n % 2 == 0) throw Error("InvalidDegree", "taylor_bounds needs odd n");
    Rational term = 1, lower = 1;
    for (unsigned k = 1; k <= n; ++k) {
        term = -term / Rational(k);
        lower += term;
    }
    Rational upper = lower - term / Rational(n + 1);
    return {lower, upper};
}

} // namespace hahnexp
