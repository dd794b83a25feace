#ifndef HAHNEXP_SERIES_HPP
#define HAHNEXP_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hahnexp/hahn.hpp"

namespace hahnexp {

/// Valuation of a series: min supp in the exponent group, Infinity for 0.
struct SeriesValuation {
    std::optional<HahnElement> value;

    bool is_infinity() const { return !value.has_value(); }
    const HahnElement& exponent() const { return *value; }
};

/// Strict order on exponents (elements of the exponent group). Throws
/// UndecidedSign if symbolic exponent coefficients cannot be separated.
bool exponent_less(const HahnElement& a, const HahnElement& b);
bool exponent_equal(const HahnElement& a, const HahnElement& b);

/// Finite-support generalized power series with Hahn-group exponents.
/// trunc, when present, certifies: every term of exponent < trunc is
/// exact; terms >= trunc may be missing. Elements without certificate are
/// exact. Immutable value type.
class SeriesElement {
public:
    struct Term {
        HahnElement exponent;
        Scalar coeff;
    };

    SeriesElement() = default;
    explicit SeriesElement(std::vector<Term> terms,
                           std::optional<HahnElement> trunc = std::nullopt);

    static SeriesElement zero() { return SeriesElement(); }
    static SeriesElement one() { return constant(Scalar(1)); }
    static SeriesElement constant(Scalar c);
    /// c * t^g
    static SeriesElement monomial(HahnElement g, Scalar c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<HahnElement>& trunc() const { return trunc_; }

    SeriesElement with_trunc(std::optional<HahnElement> trunc) const;
    /// Drop all terms of exponent >= cutoff and set the certificate.
    SeriesElement truncated_at(const HahnElement& cutoff) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_; // strictly increasing exponents, no zero coeffs
    std::optional<HahnElement> trunc_;
};

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_sub(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_neg(const SeriesElement& a);
SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_scalar_mul(const Scalar& c, const SeriesElement& a);

SeriesValuation series_valuation(const SeriesElement& a);

/// Sign of the leading coefficient of a - b.
SignDecision series_cmp(const SeriesElement& a, const SeriesElement& b);
SignDecision series_sign(const SeriesElement& a);

/// Residue map into the coefficient field: coefficient at exponent 0.
/// Requires v(a) >= 0 (NotInValuationRing otherwise).
Scalar series_residue(const SeriesElement& a);

/// K = A ⊔ A' ⊔ I_v: terms of negative exponent, the constant term, and
/// terms of positive exponent. Recombines exactly.
struct AdditiveDecomposition {
    SeriesElement infinite_part;
    Scalar constant;
    SeriesElement infinitesimal;
};
AdditiveDecomposition additive_decompose(const SeriesElement& a);

/// K^{>0} = B ⊔ B' ⊔ (1 + I_v): a = t^monomial_exponent * unit_constant *
/// one_plus_eps, exactly.
struct MultiplicativeDecomposition {
    HahnElement monomial_exponent;
    Scalar unit_constant;
    SeriesElement one_plus_eps;
};
MultiplicativeDecomposition multiplicative_decompose(const SeriesElement& a);

/// Truncated inverse via the geometric series: the result keeps exponents
/// < cutoff and satisfies v(a * invert(a) - 1) >= cutoff + v(a).
SeriesElement series_invert(const SeriesElement& a, const HahnElement& cutoff);

/// Truncated n-th root of a positive series via the binomial series; the
/// result keeps exponents < cutoff. Let w = v(a); then
/// v(result^n - a) >= cutoff * n - w * (n - 1) ... certified level is
/// (cutoff - w/n) + w, i.e. v(result^n - a) >= cutoff + w*(n-1)/n.
SeriesElement series_nth_root_positive(const SeriesElement& a, unsigned n,
                                       const HahnElement& cutoff,
                                       ScalarMode mode = ScalarMode::Symbolic);

/// Term-by-term derivative in "rational exponent" mode: every exponent
/// must be zero or a single term q*e_mu at one common index mu.
SeriesElement formal_derivative(const SeriesElement& a);

} // namespace hahnexp

#endif
