#include "hahnexp/generate.hpp"

#include <algorithm>
#include <set>

namespace hahnexp {

const std::vector<ChainPoint>& default_pool() {
    static const std::vector<ChainPoint> pool = {
        ChainPoint(-1), ChainPoint(0), ChainPoint(Rational(1, 2)), ChainPoint(3)};
    return pool;
}

long Gen::uniform_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

size_t Gen::support_size(size_t max_size) {
    size_t n = 1 + std::geometric_distribution<size_t>(0.5)(rng_);
    return std::min(n, max_size);
}

Rational Gen::small_rational() {
    long n = uniform_int(-9, 9);
    if (n == 0) n = 1;
    return Rational(n, uniform_int(1, 9));
}

Rational Gen::positive_small_rational() { return rat_abs(small_rational()); }

HahnElement Gen::hahn_element(const std::vector<ChainPoint>& pool, size_t max_terms) {
    size_t n = std::min(support_size(max_terms), pool.size());
    std::vector<size_t> idx(pool.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng_);
    std::vector<HahnElement::Term> terms;
    for (size_t i = 0; i < n; ++i)
        terms.push_back({pool[idx[i]], Scalar(small_rational())});
    return HahnElement(std::move(terms));
}

HahnElement Gen::signed_hahn_element(const std::vector<ChainPoint>& pool,
                                     size_t max_terms, int sign) {
    HahnElement e = hahn_element(pool, max_terms);
    // coefficients are rationals, so the leading sign is immediate
    int lead = e.terms().front().coeff.rational().sign();
    return lead == sign ? e : hahn_neg(e);
}

HahnElement Gen::integer_exponent(const std::vector<ChainPoint>& pool) {
    std::vector<HahnElement::Term> terms;
    for (const ChainPoint& p : pool) {
        long c = uniform_int(-4, 4);
        if (c != 0) terms.push_back({p, Scalar(Rational(c))});
    }
    return HahnElement(std::move(terms));
}

SeriesElement Gen::series(const std::vector<ChainPoint>& pool, size_t max_terms) {
    size_t n = support_size(max_terms);
    std::set<std::vector<long>> monos;
    for (size_t attempts = 0; monos.size() < n && attempts < 8 * n; ++attempts) {
        std::vector<long> mono(pool.size());
        for (auto& c : mono) c = uniform_int(-4, 4);
        monos.insert(std::move(mono));
    }
    std::vector<SeriesElement::Term> terms;
    for (const auto& mono : monos) {
        std::vector<HahnElement::Term> ht;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mono[i] != 0) ht.push_back({pool[i], Scalar(Rational(mono[i]))});
        terms.push_back({HahnElement(std::move(ht)), Scalar(small_rational())});
    }
    return SeriesElement(std::move(terms));
}

namespace {

// distinct exponents q * e_0 with q drawn from {lo/2, ..., hi/2} \ {0}
std::vector<HahnElement> q_exponents(std::mt19937_64& rng, size_t n, long lo, long hi,
                                     bool allow_zero) {
    std::vector<long> numerators;
    for (long k = lo; k <= hi; ++k)
        if (allow_zero || k != 0) numerators.push_back(k);
    std::shuffle(numerators.begin(), numerators.end(), rng);
    n = std::min(n, numerators.size());
    numerators.resize(n);
    std::sort(numerators.begin(), numerators.end());
    std::vector<HahnElement> out;
    for (long k : numerators)
        out.push_back(k == 0 ? HahnElement::zero()
                             : HahnElement::monomial(ChainPoint(0),
                                                     Scalar(Rational(k, 2))));
    return out;
}

} // namespace

SeriesElement Gen::infinitesimal_q(size_t max_terms) {
    auto exps = q_exponents(rng_, support_size(max_terms), 1, 9, false);
    std::vector<SeriesElement::Term> terms;
    for (auto& e : exps) terms.push_back({std::move(e), Scalar(small_rational())});
    return SeriesElement(std::move(terms));
}

SeriesElement Gen::purely_infinite_q(size_t max_terms, int sign) {
    auto exps = q_exponents(rng_, support_size(max_terms), -9, -1, false);
    std::vector<SeriesElement::Term> terms;
    for (auto& e : exps) terms.push_back({std::move(e), Scalar(small_rational())});
    SeriesElement s(std::move(terms));
    int lead = s.terms().front().coeff.rational().sign();
    return lead == sign ? s : series_neg(s);
}

SeriesElement Gen::mixed_series_q(size_t max_terms) {
    auto exps = q_exponents(rng_, support_size(max_terms), -9, 9, true);
    std::vector<SeriesElement::Term> terms;
    for (auto& e : exps) terms.push_back({std::move(e), Scalar(small_rational())});
    return SeriesElement(std::move(terms));
}

PLAutomorphism Gen::pl_automorphism(size_t max_breaks) {
    static const long slope_num[] = {1, 1, 1, 2, 3};
    static const long slope_den[] = {3, 2, 1, 1, 1};
    size_t n = static_cast<size_t>(uniform_int(0, static_cast<long>(max_breaks)));
    std::set<long> bset;
    while (bset.size() < n) bset.insert(uniform_int(-5, 5));
    std::vector<Rational> breakpoints(bset.begin(), bset.end());
    std::vector<Rational> slopes;
    for (size_t i = 0; i <= n; ++i) {
        long k = uniform_int(0, 4);
        slopes.push_back(Rational(slope_num[k], slope_den[k]));
    }
    return PLAutomorphism(std::move(breakpoints), std::move(slopes), small_rational());
}

std::vector<HahnElement> Gen::pseudo_cauchy_sequence(size_t length) {
    std::vector<HahnElement> seq;
    seq.push_back(hahn_element(default_pool(), 3));
    for (size_t rho = 1; rho < length; ++rho) {
        // fresh index above the pool and above all previous increments
        ChainPoint mu(Rational(10 * static_cast<long>(rho)) +
                      Rational(uniform_int(0, 8), 9));
        seq.push_back(hahn_add(seq.back(),
                               HahnElement::monomial(mu, Scalar(small_rational()))));
    }
    return seq;
}

std::vector<HahnElement> Gen::non_pseudo_cauchy_sequence(size_t length) {
    // one interior step reuses the previous step's index, so the difference
    // valuations fail to increase strictly there
    size_t k = static_cast<size_t>(uniform_int(2, static_cast<long>(length) - 1));
    std::vector<HahnElement> seq;
    seq.push_back(hahn_element(default_pool(), 3));
    for (size_t rho = 1; rho < length; ++rho) {
        long level = 10 * static_cast<long>(rho == k ? rho - 1 : rho);
        seq.push_back(hahn_add(
            seq.back(),
            HahnElement::monomial(ChainPoint(Rational(level)), Scalar(small_rational()))));
    }
    return seq;
}

} // namespace hahnexp
