#ifndef HAHNEXP_SCALAR_HPP
#define HAHNEXP_SCALAR_HPP

#include <memory>
#include <mutex>
#include <string>

#include "hahnexp/rational.hpp"

namespace hahnexp {

enum class Sign { Negative, Zero, Positive, Undecided };

/// Outcome of an exact or interval-refined comparison. Undecided is a value,
/// not an error: it records the width at which refinement gave up.
struct SignDecision {
    Sign outcome = Sign::Undecided;
    Rational precision_reached = 0;

    bool decided() const { return outcome != Sign::Undecided; }
    bool is_zero() const { return outcome == Sign::Zero; }
    bool is_positive() const { return outcome == Sign::Positive; }
    bool is_negative() const { return outcome == Sign::Negative; }
};

SignDecision decide(int sign);

/// Rational interval [lo, hi]; the exact real value always lies inside.
struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

/// Refinement configuration for symbolic comparisons. cap_width is the
/// interval width at which cmp gives up and returns Undecided.
struct ScalarConfig {
    Rational cap_width;   // default 2^-64
    int max_refine_bits = 256;
    ScalarConfig();
};

ScalarConfig& scalar_config();

enum class SymOp { Leaf, Add, Sub, Mul, Div, Exp, Log, Root };

struct SymNode;
using SymPtr = std::shared_ptr<const SymNode>;

struct SymNode {
    SymOp op = SymOp::Leaf;
    Rational leaf;          // Leaf only
    SymPtr lhs, rhs;        // rhs null for unary ops
    unsigned root_degree = 0; // Root only
};

enum class ScalarMode { RationalOnly, Symbolic };

/// Element of the coefficient field: an exact rational, or a normalized
/// exp/log/root expression over rational leaves compared by interval
/// refinement. Immutable; the interval cache is the only mutable state and
/// is synchronized internally.
class Scalar {
public:
    Scalar() : rat_(0) {}
    Scalar(long v) : rat_(v) {}
    Scalar(const Rational& v) : rat_(v) {}
    explicit Scalar(SymPtr sym);

    bool is_rational() const { return sym_ == nullptr; }
    const Rational& rational() const { return rat_; } // valid iff is_rational()
    const SymPtr& sym() const { return sym_; }

    /// Structural zero test: true only for the rational 0.
    bool is_zero() const { return is_rational() && rat_ == 0; }
    bool is_one() const { return is_rational() && rat_ == 1; }

    /// Refine this scalar's interval to width <= target (or the config cap,
    /// whichever is coarser to reach first). Always safe to call on
    /// rationals (returns the point interval).
    Interval refine(const Rational& target_width) const;

    /// Current cached interval without further refinement.
    Interval cached() const;

    bool structurally_equal(const Scalar& other) const;

    std::string to_string() const; // rational text or s-expression

private:
    Rational rat_;
    SymPtr sym_;
    struct Cache {
        std::mutex mu;
        bool valid = false;
        Interval iv;
    };
    std::shared_ptr<Cache> cache_;
};

// Field arithmetic with eager normalization. Rational operands fold exactly.
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_div(const Scalar& a, const Scalar& b); // DivisionByZero, UndecidedSign
Scalar scalar_neg(const Scalar& a);

Scalar scalar_exp(const Scalar& a);
Scalar scalar_log(const Scalar& a); // NonPositiveLogArgument, UndecidedSign
Scalar scalar_nth_root(const Scalar& a, unsigned n,
                       ScalarMode mode = ScalarMode::Symbolic);

/// Sign of a - b, refined to the configured cap in symbolic mode.
SignDecision scalar_cmp(const Scalar& a, const Scalar& b);
SignDecision scalar_sign(const Scalar& a);

/// [lo, hi] with hi - lo <= width and exp(a) inside, from Taylor partial
/// sums with an explicit remainder bound. For a < 0, |a| <= 1 the bracket
/// is the pair of consecutive alternating partial sums, refined two extra
/// steps past the first admissible pair.
Interval exp_interval(const Rational& a, const Rational& width);

/// [lo, hi] containing log(a) for rational a > 0, width <= width.
Interval log_interval(const Rational& a, const Rational& width);

/// [lo, hi] containing a^(1/n) for rational a > 0, width <= width.
Interval nth_root_interval(const Rational& a, unsigned n, const Rational& width);

/// S-expression text form, e.g. "(exp 1)", "(sub (exp 1) 1)", "(root 2 2)".
std::string scalar_to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text); // ParseError

} // namespace hahnexp

#endif
