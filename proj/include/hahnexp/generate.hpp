#ifndef HAHNEXP_GENERATE_HPP
#define HAHNEXP_GENERATE_HPP

#include <random>
#include <vector>

#include "hahnexp/chain.hpp"
#include "hahnexp/hahn.hpp"
#include "hahnexp/series.hpp"

namespace hahnexp {

/// Seeded source for all randomized suites. Distributions are fixed and
/// documented here so identical (seed, query order) reproduce identical
/// inputs:
///   - support sizes: 1 + Geometric(1/2), clipped to a per-call maximum;
///   - coefficients: uniform small rationals, numerator in [-9, 9] \ {0},
///     denominator in [1, 9];
///   - exponents / chain indices: drawn from a pinned pool of chain points.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    long uniform_int(long lo, long hi);
    /// 1 + Geometric(1/2), clipped to [1, max_size]
    size_t support_size(size_t max_size);
    /// numerator in [-9, 9] \ {0}, denominator in [1, 9]
    Rational small_rational();
    Rational positive_small_rational();

    /// Random subset of the pool (distinct points, ascending), paired with
    /// small rational coefficients.
    HahnElement hahn_element(const std::vector<ChainPoint>& pool, size_t max_terms);
    /// As above but with nonzero result and prescribed sign (+1 / -1).
    HahnElement signed_hahn_element(const std::vector<ChainPoint>& pool,
                                    size_t max_terms, int sign);
    /// Exponent vectors over the pool with integer coordinates in [-4, 4]
    /// (the shape the Laurent oracle mirrors bit-exactly).
    HahnElement integer_exponent(const std::vector<ChainPoint>& pool);

    /// Series with <= max_terms distinct integer-vector exponents over the
    /// pool and small rational coefficients.
    SeriesElement series(const std::vector<ChainPoint>& pool, size_t max_terms);

    /// Infinitesimal in rational-exponent shape: terms c * t^{q e_0} with
    /// q in {1/2, 1, 3/2, ..., 9/2} (so Taylor pruning against a cutoff at
    /// index 0 terminates quickly).
    SeriesElement infinitesimal_q(size_t max_terms);
    /// Purely infinite series: exponents -q e_0, q > 0 as above.
    SeriesElement purely_infinite_q(size_t max_terms, int sign);
    /// General series in rational-exponent shape: infinite + constant +
    /// infinitesimal parts, any of which may vanish.
    SeriesElement mixed_series_q(size_t max_terms);

    /// Increasing piecewise-linear automorphism with <= max_breaks
    /// breakpoints, slopes in {1/3, 1/2, 1, 2, 3}, small rational offsets.
    PLAutomorphism pl_automorphism(size_t max_breaks);

    /// Pseudo-Cauchy sequence: random start, then successive fresh terms at
    /// strictly increasing indices. length >= 3.
    std::vector<HahnElement> pseudo_cauchy_sequence(size_t length);
    /// Same shape with the monotonicity of difference valuations broken at
    /// one interior step.
    std::vector<HahnElement> non_pseudo_cauchy_sequence(size_t length);

private:
    std::mt19937_64 rng_;
};

/// The pinned chain points every suite draws exponent indices from.
const std::vector<ChainPoint>& default_pool();

} // namespace hahnexp

#endif
