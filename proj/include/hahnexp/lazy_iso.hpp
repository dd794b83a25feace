#ifndef HAHNEXP_LAZY_ISO_HPP
#define HAHNEXP_LAZY_ISO_HPP

#include <functional>
#include <mutex>
#include <vector>

#include "hahnexp/chain.hpp"
#include "hahnexp/errors.hpp"
#include "hahnexp/hahn.hpp"

namespace hahnexp {

enum class IsoDirection { Forward, Backward };

/// One memoized pair of a lazy chain isomorphism.
template <typename Target>
struct IsoPin {
    ChainPoint source;
    Target target;
};

/// Lazily constructed order-isomorphism from the rational chain into a
/// target chain, built by constraint-maintaining back-and-forth. The memo
/// of pinned pairs is the only state; queries are deterministic given the
/// query order. Extension is synchronized internally.
///
/// Target requirements: policy provides comparison and fresh-point
/// selection; see QMidpointPolicy and NegGroupPolicy.
template <typename Target, typename Policy>
class LazyChainIso {
public:
    using Pin = IsoPin<Target>;

    explicit LazyChainIso(Policy policy = Policy()) : policy_(std::move(policy)) {}

    /// Pre-pin a pair. Order-consistency with existing pins is enforced;
    /// the policy constraint is NOT (fixtures use this to build violations).
    void pin(const ChainPoint& source, const Target& target) {
        std::lock_guard<std::mutex> lock(mu_);
        size_t i = lower_bound_source(source);
        if (i < pins_.size() && pins_[i].source == source) {
            if (policy_.target_cmp(pins_[i].target, target) != 0)
                throw ConstraintUnsatisfiable("conflicting pin for the same source point");
            return;
        }
        check_order_fit(i, source, target);
        pins_.insert(pins_.begin() + i, Pin{source, target});
    }

    Target forward(const ChainPoint& x) {
        std::lock_guard<std::mutex> lock(mu_);
        size_t i = lower_bound_source(x);
        if (i < pins_.size() && pins_[i].source == x) return pins_[i].target;
        const Pin* lo = i > 0 ? &pins_[i - 1] : nullptr;
        const Pin* hi = i < pins_.size() ? &pins_[i] : nullptr;
        Target cand = policy_.pick_forward(x, lo, hi);
        check_order_fit(i, x, cand);
        if (!policy_.admissible(x, cand))
            throw ConstraintUnsatisfiable("forward extension violates the pin constraint");
        pins_.insert(pins_.begin() + i, Pin{x, cand});
        return cand;
    }

    ChainPoint backward(const Target& y) {
        std::lock_guard<std::mutex> lock(mu_);
        size_t i = lower_bound_target(y);
        if (i < pins_.size() && policy_.target_cmp(pins_[i].target, y) == 0)
            return pins_[i].source;
        const Pin* lo = i > 0 ? &pins_[i - 1] : nullptr;
        const Pin* hi = i < pins_.size() ? &pins_[i] : nullptr;
        ChainPoint cand = policy_.pick_backward(y, lo, hi);
        if ((lo && !(lo->source < cand)) || (hi && !(cand < hi->source)))
            throw ConstraintUnsatisfiable("backward extension breaks source order");
        if (!policy_.admissible(cand, y))
            throw ConstraintUnsatisfiable("backward extension violates the pin constraint");
        pins_.insert(pins_.begin() + i, Pin{cand, y});
        return cand;
    }

    std::vector<Pin> snapshot() const {
        std::lock_guard<std::mutex> lock(mu_);
        return pins_;
    }

    Policy& policy() { return policy_; }

private:
    size_t lower_bound_source(const ChainPoint& x) const {
        size_t lo = 0, hi = pins_.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (pins_[mid].source < x) lo = mid + 1; else hi = mid;
        }
        return lo;
    }

    size_t lower_bound_target(const Target& y) const {
        size_t lo = 0, hi = pins_.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (policy_.target_cmp(pins_[mid].target, y) < 0) lo = mid + 1; else hi = mid;
        }
        return lo;
    }

    void check_order_fit(size_t i, const ChainPoint&, const Target& target) const {
        if (i > 0 && policy_.target_cmp(pins_[i - 1].target, target) >= 0)
            throw ConstraintUnsatisfiable("extension breaks target order (lower neighbor)");
        if (i < pins_.size() && policy_.target_cmp(target, pins_[i].target) >= 0)
            throw ConstraintUnsatisfiable("extension breaks target order (upper neighbor)");
    }

    mutable std::mutex mu_;
    std::vector<Pin> pins_; // sorted by source and, by order preservation, by target
    Policy policy_;
};

/// Policy for isomorphisms Q -> Q: midpoint insertion, unit steps beyond
/// the extremes, optional extra constraint.
struct QMidpointPolicy {
    std::function<bool(const ChainPoint&, const ChainPoint&)> constraint;

    int target_cmp(const ChainPoint& a, const ChainPoint& b) const {
        return a < b ? -1 : b < a ? 1 : 0;
    }

    using Pin = IsoPin<ChainPoint>;

    ChainPoint pick_forward(const ChainPoint&, const Pin* lo, const Pin* hi) const {
        return pick(lo ? &lo->target : nullptr, hi ? &hi->target : nullptr);
    }
    ChainPoint pick_backward(const ChainPoint&, const Pin* lo, const Pin* hi) const {
        return pick(lo ? &lo->source : nullptr, hi ? &hi->source : nullptr);
    }
    bool admissible(const ChainPoint& s, const ChainPoint& t) const {
        return !constraint || constraint(s, t);
    }

private:
    static ChainPoint pick(const ChainPoint* lo, const ChainPoint* hi) {
        if (lo && hi) return between(*lo, *hi);
        if (lo) return ChainPoint(lo->value + 1);
        if (hi) return ChainPoint(hi->value - 1);
        return ChainPoint(0);
    }
};

/// Extension rule for isomorphisms Q -> G^{<0}.
enum class GroupIsoMode {
    Strong,   // maintain v_G(g) > gamma on every pin
    Diagonal, // prefer g = -e_gamma: exactly non-strong wherever it fits
    Free      // order-consistent only
};

/// Policy for isomorphisms from the rational chain onto the negative cone
/// of the Hahn group. Fresh forward images perturb a neighbor by a
/// monomial of high valuation class; unbounded extensions use fresh
/// monomials chosen by density. source_back maps the iso's source point to
/// the exponential's argument point (identity unless precomposed).
struct NegGroupPolicy {
    GroupIsoMode mode = GroupIsoMode::Strong;
    // source point of the iso -> argument point of the exponential, and its
    // inverse; both default to the identity (no precomposition)
    std::function<ChainPoint(const ChainPoint&)> source_back;
    std::function<ChainPoint(const ChainPoint&)> source_fwd;

    ChainPoint back(const ChainPoint& s) const { return source_back ? source_back(s) : s; }

    int target_cmp(const HahnElement& a, const HahnElement& b) const {
        SignDecision d = hahn_cmp(a, b);
        if (d.outcome == Sign::Undecided)
            throw UndecidedSign("group element order undecided");
        return d.outcome == Sign::Negative ? -1 : d.outcome == Sign::Positive ? 1 : 0;
    }

    using Pin = IsoPin<HahnElement>;

    HahnElement pick_forward(const ChainPoint& x, const Pin* lo, const Pin* hi) const;
    ChainPoint pick_backward(const HahnElement& y, const Pin* lo, const Pin* hi) const;
    bool admissible(const ChainPoint& s, const HahnElement& t) const;
};

using GroupChainIso = LazyChainIso<HahnElement, NegGroupPolicy>;
using RationalChainIso = LazyChainIso<ChainPoint, QMidpointPolicy>;

} // namespace hahnexp

#endif
