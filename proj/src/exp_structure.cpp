#include "hahnexp/exp_structure.hpp"

#include "hahnexp/errors.hpp"
#include "hahnexp/json_io.hpp"

namespace hahnexp {

GroupExponential::GroupExponential(GroupIsoMode mode, PLAutomorphism precompose)
    : mode_(mode), precompose_(std::move(precompose)) {
    NegGroupPolicy policy;
    policy.mode = mode;
    if (!precompose_.is_identity()) {
        PLAutomorphism sigma = precompose_;
        PLAutomorphism sigma_inv = precompose_.inverse();
        policy.source_back = [sigma_inv](const ChainPoint& s) {
            return sigma_inv.apply(s);
        };
        policy.source_fwd = [sigma](const ChainPoint& g) { return sigma.apply(g); };
    }
    iso_ = std::make_shared<GroupChainIso>(std::move(policy));
}

HahnElement GroupExponential::apply(const ChainPoint& gamma) {
    return iso_->forward(precompose_.apply(gamma));
}

ChainPoint GroupExponential::apply_inverse(const HahnElement& g) {
    return precompose_.apply_inverse(iso_->backward(g));
}

void GroupExponential::pin(const ChainPoint& gamma, const HahnElement& g) {
    SignDecision d = hahn_sign(g);
    if (d.outcome != Sign::Negative)
        throw NotNegative("pinned image must be a negative group element");
    iso_->pin(precompose_.apply(gamma), g);
}

Contraction chi_from_h(GroupExponential h) {
    Contraction chi;
    chi.description = "chi_h induced by a group exponential";
    auto hp = std::make_shared<GroupExponential>(std::move(h));
    chi.map = [hp](const HahnElement& x) -> HahnElement {
        if (x.is_zero()) return HahnElement::zero();
        SignDecision s = hahn_sign(x);
        if (s.outcome == Sign::Undecided)
            throw UndecidedSign("sign of contraction argument undecided");
        HahnElement img = hp->apply(hahn_valuation(x).point());
        return s.outcome == Sign::Negative ? img : hahn_neg(img);
    };
    chi.preimage = [hp](const HahnElement& y) -> HahnElement {
        if (y.is_zero()) return HahnElement::zero();
        SignDecision s = hahn_sign(y);
        if (s.outcome == Sign::Undecided)
            throw UndecidedSign("sign of contraction target undecided");
        // chi(-e_{h^{-1}(|y| negated)}) = y
        HahnElement neg_y = s.outcome == Sign::Negative ? y : hahn_neg(y);
        ChainPoint gamma = hp->apply_inverse(neg_y);
        HahnElement x = hahn_neg(HahnElement::monomial(gamma));
        return s.outcome == Sign::Negative ? x : hahn_neg(x);
    };
    return chi;
}

HahnElement chi_apply(const Contraction& chi, const HahnElement& x) {
    return chi.map(x);
}

CheckReport check_strong(GroupExponential& h, const std::vector<HahnElement>& sample) {
    CheckReport report;
    report.check = "strong";
    for (const HahnElement& g : sample) {
        SignDecision s = hahn_sign(g);
        if (s.outcome != Sign::Negative)
            throw NotNegative("check_strong samples must be negative and nonzero");
        HahnElement img = h.apply(hahn_valuation(g).point());
        SignDecision d = hahn_cmp(img, g);
        if (d.outcome == Sign::Undecided) {
            report.undecide();
        } else if (d.outcome == Sign::Positive) {
            report.pass();
        } else {
            report.fail({{"g", hahn_to_json(g)},
                         {"h_of_class", hahn_to_json(img)},
                         {"violated", "h(v_G(g)) > g"}});
        }
    }
    return report;
}

CheckReport check_contraction_axioms(const Contraction& chi,
                                     const std::vector<HahnElement>& sample) {
    CheckReport report;
    report.check = "contraction-axioms";
    report.config["note"] = "surjectivity verified on sample / constructible preimages";

    std::vector<HahnElement> images;
    images.reserve(sample.size());
    for (const HahnElement& x : sample) images.push_back(chi_apply(chi, x));

    // chi(x) = 0 iff x = 0
    for (size_t i = 0; i < sample.size(); ++i) {
        bool x_zero = sample[i].is_zero();
        bool img_zero = images[i].is_zero();
        if (x_zero == img_zero)
            report.pass();
        else
            report.fail({{"axiom", "chi(x) = 0 iff x = 0"},
                         {"x", hahn_to_json(sample[i])},
                         {"chi_x", hahn_to_json(images[i])}});
    }

    // monotone and class-sign constancy, over all pairs
    for (size_t i = 0; i < sample.size(); ++i)
        for (size_t j = i + 1; j < sample.size(); ++j) {
            SignDecision ord = hahn_cmp(sample[i], sample[j]);
            SignDecision img_ord = hahn_cmp(images[i], images[j]);
            if (ord.outcome == Sign::Undecided || img_ord.outcome == Sign::Undecided) {
                report.undecide();
            } else {
                bool mono =
                    (ord.outcome != Sign::Negative || img_ord.outcome != Sign::Positive) &&
                    (ord.outcome != Sign::Positive || img_ord.outcome != Sign::Negative);
                if (mono)
                    report.pass();
                else
                    report.fail({{"axiom", "chi preserves <="},
                                 {"x", hahn_to_json(sample[i])},
                                 {"y", hahn_to_json(sample[j])}});
            }

            if (sample[i].is_zero() || sample[j].is_zero()) continue;
            SignDecision si = hahn_sign(sample[i]);
            SignDecision sj = hahn_sign(sample[j]);
            GroupValuation vi = hahn_valuation(sample[i]);
            GroupValuation vj = hahn_valuation(sample[j]);
            if (si.outcome == sj.outcome && vi == vj) {
                SignDecision eq = hahn_cmp(images[i], images[j]);
                if (eq.outcome == Sign::Undecided)
                    report.undecide();
                else if (eq.outcome == Sign::Zero)
                    report.pass();
                else
                    report.fail({{"axiom", "class-sign constancy"},
                                 {"x", hahn_to_json(sample[i])},
                                 {"y", hahn_to_json(sample[j])},
                                 {"chi_x", hahn_to_json(images[i])},
                                 {"chi_y", hahn_to_json(images[j])}});
            }
        }

    // partial surjectivity: each sampled nonzero element must have a
    // sampled or constructible preimage
    for (const HahnElement& y : sample) {
        if (y.is_zero()) continue;
        bool found = false;
        for (size_t i = 0; i < images.size() && !found; ++i)
            if (hahn_cmp(images[i], y).outcome == Sign::Zero) found = true;
        if (!found && chi.preimage) {
            HahnElement x = chi.preimage(y);
            found = hahn_cmp(chi_apply(chi, x), y).outcome == Sign::Zero;
        }
        if (found)
            report.pass();
        else
            report.fail({{"axiom", "surjectivity (partial)"}, {"y", hahn_to_json(y)}});
    }
    return report;
}

CheckReport check_centripetal(const Contraction& chi,
                              const std::vector<HahnElement>& sample,
                              CentripetalDirection direction) {
    CheckReport report;
    report.check = "centripetal";
    report.config["direction"] = direction == CentripetalDirection::LemmaConsistent
                                     ? "lemma_consistent"
                                     : "paper_literal";
    for (const HahnElement& x : sample) {
        if (x.is_zero())
            throw NotPositive("check_centripetal samples must be nonzero");
        HahnElement ax = hahn_abs(x);
        HahnElement achi = hahn_abs(chi_apply(chi, x));
        SignDecision d = direction == CentripetalDirection::LemmaConsistent
                             ? hahn_cmp(achi, ax)
                             : hahn_cmp(ax, achi);
        if (d.outcome == Sign::Undecided)
            report.undecide();
        else if (d.outcome == Sign::Negative)
            report.pass();
        else
            report.fail({{"x", hahn_to_json(x)},
                         {"chi_x", hahn_to_json(chi_apply(chi, x))},
                         {"direction", report.config["direction"]}});
    }
    return report;
}

InducedExponentialTable h_from_chi(const Contraction& chi,
                                   const std::vector<HahnElement>& sample) {
    // precondition: the contraction axioms hold on the sample
    CheckReport axioms = check_contraction_axioms(chi, sample);
    if (!axioms.failures.empty())
        throw NotContractionAxioms("sample violates the contraction axioms");

    InducedExponentialTable table;
    for (const HahnElement& g : sample) {
        SignDecision s = hahn_sign(g);
        if (s.outcome != Sign::Negative)
            throw NotNegative("h_from_chi samples must be negative");
        ChainPoint cls = hahn_valuation(g).point();
        HahnElement img = chi_apply(chi, g);
        bool placed = false;
        for (auto& [c, existing] : table.pins) {
            if (c == cls) {
                if (hahn_cmp(existing, img).outcome != Sign::Zero)
                    throw NotWellDefined("same class, different chi values: class " +
                                         rational_to_string(cls.value));
                placed = true;
                break;
            }
        }
        if (!placed) table.pins.emplace_back(cls, img);
    }
    std::sort(table.pins.begin(), table.pins.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // order preservation across classes
    for (size_t i = 1; i < table.pins.size(); ++i)
        if (hahn_cmp(table.pins[i - 1].second, table.pins[i].second).outcome !=
            Sign::Negative)
            throw NotWellDefined("induced table is not order-preserving");
    return table;
}

HahnElement lift_chain_automorphism(const PLAutomorphism& sigma, const HahnElement& s) {
    std::vector<HahnElement::Term> out;
    out.reserve(s.terms().size());
    for (const auto& t : s.terms()) out.push_back({sigma.apply(t.idx), t.coeff});
    return HahnElement(std::move(out));
}

} // namespace hahnexp
