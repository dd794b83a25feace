#ifndef HAHNEXP_HAHN_HPP
#define HAHNEXP_HAHN_HPP

#include <optional>
#include <string>
#include <vector>

#include "hahnexp/chain.hpp"
#include "hahnexp/scalar.hpp"

namespace hahnexp {

/// min supp, with Infinity (empty optional) for the zero element.
struct GroupValuation {
    std::optional<ChainPoint> value;

    bool is_infinity() const { return !value.has_value(); }
    const ChainPoint& point() const { return *value; }

    friend bool operator==(const GroupValuation& a, const GroupValuation& b) {
        if (a.is_infinity() || b.is_infinity())
            return a.is_infinity() && b.is_infinity();
        return *a.value == *b.value;
    }
};

/// Element of the Hahn sum over the rational chain: a finite-support map
/// from chain points to scalars, ordered lexicographically from the
/// smallest support index. Immutable value type.
class HahnElement {
public:
    struct Term {
        ChainPoint idx;
        Scalar coeff;
    };

    HahnElement() = default;
    /// terms need not be sorted; they are normalized (sorted, merged,
    /// structural zeros dropped).
    explicit HahnElement(std::vector<Term> terms);

    static HahnElement zero() { return HahnElement(); }
    /// The monomial c * e_idx.
    static HahnElement monomial(ChainPoint idx, Scalar coeff = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }

    /// Coefficient at idx (0 if absent).
    Scalar coeff_at(const ChainPoint& idx) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_; // strictly increasing idx, no zero coeffs
};

HahnElement hahn_add(const HahnElement& a, const HahnElement& b);
HahnElement hahn_neg(const HahnElement& a);
HahnElement hahn_sub(const HahnElement& a, const HahnElement& b);
HahnElement hahn_scalar_mul(const Scalar& c, const HahnElement& a);
/// Witness of divisibility: b with n*b = a.
HahnElement hahn_divide_by_n(const HahnElement& a, unsigned n);
/// a * n (integer multiple).
HahnElement hahn_int_mul(const HahnElement& a, long n);

/// Lexicographic sign of a - b; Undecided propagates from symbolic
/// coefficient comparison.
SignDecision hahn_cmp(const HahnElement& a, const HahnElement& b);
SignDecision hahn_sign(const HahnElement& a);
/// |a|; throws UndecidedSign if the sign cannot be decided.
HahnElement hahn_abs(const HahnElement& a);

GroupValuation hahn_valuation(const HahnElement& a);

/// Image of a in the archimedean component B(H, gamma) = H^gamma / H_gamma,
/// identified with the coefficient field. Requires v_G(a) >= gamma.
Scalar component_residue(const HahnElement& a, const ChainPoint& gamma);

/// Verification report for a pseudo-Cauchy sequence and its returned
/// pseudo limit.
struct PseudoLimitReport {
    HahnElement limit;
    struct Row {
        size_t rho;
        GroupValuation v_to_limit;      // v(a_rho - a)
        GroupValuation v_consecutive;   // v(a_rho - a_{rho+1})
        bool ok;
    };
    std::vector<Row> rows;
    bool all_ok() const;
    // the returned element is one admissible representative, not canonical
    static constexpr const char* note =
        "limit is one admissible representative of the pseudo limit";
};

/// Checks the pseudo-Cauchy condition on all triples, then returns the
/// final term extended by one fresh higher-index term together with a
/// verification of v(a_rho - a) = v(a_rho - a_{rho+1}) for every rho.
/// Throws NotPseudoCauchy (message names the violating triple).
PseudoLimitReport pseudo_limit(const std::vector<HahnElement>& seq);

} // namespace hahnexp

#endif
