#include "hahnexp/hahn.hpp"

#include <algorithm>

#include "hahnexp/errors.hpp"

namespace hahnexp {

HahnElement::HahnElement(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.idx < b.idx; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().idx == t.idx) {
            terms_.back().coeff = scalar_add(terms_.back().coeff, t.coeff);
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            terms_.push_back(std::move(t));
        }
    }
}

HahnElement HahnElement::monomial(ChainPoint idx, Scalar coeff) {
    if (coeff.is_zero()) return zero();
    HahnElement e;
    e.terms_.push_back({std::move(idx), std::move(coeff)});
    return e;
}

Scalar HahnElement::coeff_at(const ChainPoint& idx) const {
    for (const Term& t : terms_)
        if (t.idx == idx) return t.coeff;
    return Scalar(0);
}

std::string HahnElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += scalar_to_string(terms_[i].coeff) + "*e[" +
               rational_to_string(terms_[i].idx.value) + "]";
    }
    return out;
}

HahnElement hahn_add(const HahnElement& a, const HahnElement& b) {
    std::vector<HahnElement::Term> out;
    out.reserve(a.terms().size() + b.terms().size());
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->idx < ib->idx) {
            out.push_back(*ia++);
        } else if (ib->idx < ia->idx) {
            out.push_back(*ib++);
        } else {
            Scalar c = scalar_add(ia->coeff, ib->coeff);
            if (!c.is_zero()) out.push_back({ia->idx, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.terms().end());
    out.insert(out.end(), ib, b.terms().end());
    return HahnElement(std::move(out));
}

HahnElement hahn_neg(const HahnElement& a) {
    std::vector<HahnElement::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.idx, scalar_neg(t.coeff)});
    return HahnElement(std::move(out));
}

HahnElement hahn_sub(const HahnElement& a, const HahnElement& b) {
    return hahn_add(a, hahn_neg(b));
}

HahnElement hahn_scalar_mul(const Scalar& c, const HahnElement& a) {
    if (c.is_zero()) return HahnElement::zero();
    std::vector<HahnElement::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms()) out.push_back({t.idx, scalar_mul(c, t.coeff)});
    return HahnElement(std::move(out));
}

HahnElement hahn_divide_by_n(const HahnElement& a, unsigned n) {
    if (n == 0) throw DivisionByZero("divide_by_n with n = 0");
    return hahn_scalar_mul(Scalar(Rational(1, n)), a);
}

HahnElement hahn_int_mul(const HahnElement& a, long n) {
    return hahn_scalar_mul(Scalar(Rational(n)), a);
}

SignDecision hahn_sign(const HahnElement& a) {
    if (a.is_zero()) return decide(0);
    // lexicographic: the coefficient at min supp decides
    return scalar_sign(a.terms().front().coeff);
}

SignDecision hahn_cmp(const HahnElement& a, const HahnElement& b) {
    return hahn_sign(hahn_sub(a, b));
}

HahnElement hahn_abs(const HahnElement& a) {
    SignDecision s = hahn_sign(a);
    if (s.outcome == Sign::Undecided)
        throw UndecidedSign("sign of Hahn element undecided at precision cap");
    return s.outcome == Sign::Negative ? hahn_neg(a) : a;
}

GroupValuation hahn_valuation(const HahnElement& a) {
    if (a.is_zero()) return GroupValuation{};
    return GroupValuation{a.terms().front().idx};
}

Scalar component_residue(const HahnElement& a, const ChainPoint& gamma) {
    GroupValuation v = hahn_valuation(a);
    if (!v.is_infinity() && v.point() < gamma)
        throw NotInComponentDomain("v_G(a) = " + rational_to_string(v.point().value) +
                                   " < gamma = " + rational_to_string(gamma.value));
    return a.coeff_at(gamma);
}

bool PseudoLimitReport::all_ok() const {
    for (const Row& r : rows)
        if (!r.ok) return false;
    return true;
}

PseudoLimitReport pseudo_limit(const std::vector<HahnElement>& seq) {
    if (seq.size() < 3)
        throw NotPseudoCauchy("sequence too short (need length >= 3)");

    // consecutive difference valuations must be finite and strictly increasing
    std::vector<GroupValuation> dv(seq.size() - 1);
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        dv[i] = hahn_valuation(hahn_sub(seq[i], seq[i + 1]));
        if (dv[i].is_infinity())
            throw NotPseudoCauchy("terms " + std::to_string(i) + " and " +
                                  std::to_string(i + 1) + " are equal");
        if (i > 0 && !(dv[i - 1].point() < dv[i].point()))
            throw NotPseudoCauchy("difference valuations not strictly increasing at triple (" +
                                  std::to_string(i - 1) + ", " + std::to_string(i) + ", " +
                                  std::to_string(i + 1) + ")");
    }
    // full triple condition v(a_rho - a_sigma) < v(a_sigma - a_tau): given
    // strictly increasing consecutive valuations, v(a_i - a_j) = dv[i] for
    // i < j (ultrametric), so it suffices to confirm that identity pairwise
    // allocation-free v(a - b): the least index where the terms differ
    auto diff_valuation = [](const HahnElement& a, const HahnElement& b) {
        auto ia = a.terms().begin(), ib = b.terms().begin();
        while (ia != a.terms().end() && ib != b.terms().end()) {
            if (ia->idx < ib->idx) return GroupValuation{ia->idx};
            if (ib->idx < ia->idx) return GroupValuation{ib->idx};
            if (!scalar_cmp(ia->coeff, ib->coeff).is_zero())
                return GroupValuation{ia->idx};
            ++ia;
            ++ib;
        }
        if (ia != a.terms().end()) return GroupValuation{ia->idx};
        if (ib != b.terms().end()) return GroupValuation{ib->idx};
        return GroupValuation{};
    };
    for (size_t r = 0; r + 1 < seq.size(); ++r)
        for (size_t s = r + 1; s < seq.size(); ++s) {
            GroupValuation v = diff_valuation(seq[r], seq[s]);
            if (!(v == dv[r]))
                throw NotPseudoCauchy("pair (" + std::to_string(r) + ", " +
                                      std::to_string(s) +
                                      ") violates the pseudo-Cauchy condition");
        }

    // limit = final term plus a fresh term at index (last valuation + 1/2)
    const ChainPoint& last = dv.back().point();
    ChainPoint fresh(last.value + Rational(1, 2));
    PseudoLimitReport report;
    report.limit = hahn_add(seq.back(), HahnElement::monomial(fresh));

    for (size_t r = 0; r + 1 < seq.size(); ++r) {
        PseudoLimitReport::Row row;
        row.rho = r;
        row.v_to_limit = hahn_valuation(hahn_sub(seq[r], report.limit));
        row.v_consecutive = dv[r];
        row.ok = row.v_to_limit == row.v_consecutive;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hahnexp
