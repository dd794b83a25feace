#ifndef HAHNEXP_EXP_FIELD_HPP
#define HAHNEXP_EXP_FIELD_HPP

#include "hahnexp/exp_structure.hpp"
#include "hahnexp/series.hpp"

namespace hahnexp {

enum class MiddleMode { Symbolic, ZeroOnly };

/// Assembly configuration for the glued exponential exp_L * exp_M * exp_R.
struct ExpConfig {
    GroupExponential h{GroupIsoMode::Strong};
    MiddleMode middle_mode = MiddleMode::Symbolic;
    HahnElement right_cutoff;  // must be > 0
    unsigned ga_max_n = 5;

    ExpConfig();
    void validate() const;
};

/// Taylor exponential of an infinitesimal, truncated at cutoff
/// (NotInfinitesimal unless v(eps) > 0).
SeriesElement exp_right(const SeriesElement& eps, const HahnElement& cutoff);

/// Mercator logarithm of 1 + infinitesimal, truncated at cutoff.
SeriesElement log_right(const SeriesElement& u, const HahnElement& cutoff);

/// v-left exponential: for purely infinite a, relabels the support of a
/// through h^{-1} into the group element l(a) and returns the monomial
/// t^{-l(a)}. Exact (no truncation).
SeriesElement exp_left(const SeriesElement& a, GroupExponential& h);

/// Inverse of exp_left on monomials t^w with w < 0... more precisely on
/// any monomial in the image: recovers the purely infinite argument.
SeriesElement log_left(const HahnElement& monomial_exponent, GroupExponential& h);

/// Glued exponential exp_L(a) * exp_M(c) * exp_R(eps) over the additive
/// decomposition x = a + c + eps. In ZeroOnly middle mode the constant
/// part must vanish (MiddleUnsupported otherwise).
SeriesElement exp_full(const SeriesElement& x, ExpConfig& cfg);

/// Inverse of exp_full via the multiplicative decomposition.
SeriesElement log_full(const SeriesElement& u, ExpConfig& cfg);

/// Growth axiom instances: for each n <= ga_max_n and each purely infinite
/// positive sample x with x >= n^2, verifies exp(x) > x^n.
CheckReport check_ga(ExpConfig& cfg, const std::vector<SeriesElement>& samples);

/// v-compatibility: v(exp(1) - 1) = 0, and exp(eps) in 1 + I_v for the
/// given infinitesimal samples. Requires the symbolic middle mode.
CheckReport check_v_compatible(ExpConfig& cfg,
                               const std::vector<SeriesElement>& infinitesimals);

/// The assembled exponential induces exactly the input h:
/// v(h_exp~(g)) = h(v_G(g)) for each nonzero sample g.
CheckReport check_induced_h(ExpConfig& cfg, const std::vector<HahnElement>& samples);

/// Taylor partial sums of exp(-1): (sum_{k<=n}, sum_{k<=n+1}) for odd n.
/// The lower bound is strictly below, the upper strictly above exp(-1),
/// and brackets nest strictly as n grows.
std::pair<Rational, Rational> taylor_bounds(unsigned n);

} // namespace hahnexp

#endif
