#ifndef HAHNEXP_EXP_STRUCTURE_HPP
#define HAHNEXP_EXP_STRUCTURE_HPP

#include <functional>
#include <memory>

#include "hahnexp/lazy_iso.hpp"
#include "hahnexp/report.hpp"

namespace hahnexp {

/// Group exponential h: Gamma -> G^{<0}, realized as a lazy chain
/// isomorphism optionally precomposed with a piecewise-linear automorphism
/// of Gamma. When built in Strong mode every pinned image g = h(gamma)
/// satisfies v_G(g) > gamma.
class GroupExponential {
public:
    explicit GroupExponential(GroupIsoMode mode = GroupIsoMode::Strong,
                              PLAutomorphism precompose = PLAutomorphism());

    HahnElement apply(const ChainPoint& gamma);
    /// Preimage of a negative group element (NotNegative otherwise).
    ChainPoint apply_inverse(const HahnElement& g);

    /// Pre-pin h(gamma) = g; order-consistency enforced, strength not.
    void pin(const ChainPoint& gamma, const HahnElement& g);

    std::vector<IsoPin<HahnElement>> snapshot() const { return iso_->snapshot(); }
    GroupIsoMode mode() const { return mode_; }
    const PLAutomorphism& precompose() const { return precompose_; }

private:
    GroupIsoMode mode_;
    PLAutomorphism precompose_;
    std::shared_ptr<GroupChainIso> iso_; // shared: the exponential is copyable
};

/// Contraction map on G: constant on (archimedean class, sign) pairs.
/// Either induced from a group exponential or supplied as a raw map (for
/// counterexample fixtures).
struct Contraction {
    std::function<HahnElement(const HahnElement&)> map;
    /// Optional constructive preimage: given a target, produce x with
    /// chi(x) = target (used by the partial surjectivity check).
    std::function<HahnElement(const HahnElement&)> preimage;
    std::string description;
};

/// chi_h(x) = 0 if x = 0; h(v_G(x)) if x < 0; -h(v_G(x)) if x > 0.
/// The x > 0 branch is the odd extension (sign-respecting repair of the
/// literal display, under which all contraction axioms hold).
Contraction chi_from_h(GroupExponential h);
HahnElement chi_apply(const Contraction& chi, const HahnElement& x);

/// Literal strongness check: h(v_G(g)) > g for every sample g < 0.
CheckReport check_strong(GroupExponential& h, const std::vector<HahnElement>& sample);

/// The four pointwise contraction axioms on the sample (surjectivity is
/// checked partially: sampled targets must have sampled or constructible
/// preimages).
CheckReport check_contraction_axioms(const Contraction& chi,
                                     const std::vector<HahnElement>& sample);

enum class CentripetalDirection {
    LemmaConsistent, // |chi(x)| < |x| (forced by the strong/centripetal lemma)
    PaperLiteral     // |x| < |chi(x)| (the axiom as displayed)
};

CheckReport check_centripetal(const Contraction& chi,
                              const std::vector<HahnElement>& sample,
                              CentripetalDirection direction =
                                  CentripetalDirection::LemmaConsistent);

/// The induced group exponential h_chi(v_G(g)) = chi(g) as a verified
/// partial map: well-defined on classes and order-preserving.
struct InducedExponentialTable {
    std::vector<std::pair<ChainPoint, HahnElement>> pins; // sorted by class
};
InducedExponentialTable h_from_chi(const Contraction& chi,
                                   const std::vector<HahnElement>& sample);

/// tau(s) = s ∘ sigma^{-1}: relabel each support point gamma to
/// sigma(gamma), keeping coefficients.
HahnElement lift_chain_automorphism(const PLAutomorphism& sigma, const HahnElement& s);

} // namespace hahnexp

#endif
