#ifndef HAHNEXP_CHAIN_HPP
#define HAHNEXP_CHAIN_HPP

#include <compare>
#include <vector>

#include "hahnexp/rational.hpp"

namespace hahnexp {

/// Point of the canonical countable dense chain, the rational line.
struct ChainPoint {
    Rational value;

    ChainPoint() = default;
    ChainPoint(long v) : value(v) {}
    explicit ChainPoint(Rational v) : value(std::move(v)) {}

    friend bool operator==(const ChainPoint& a, const ChainPoint& b) {
        return a.value == b.value;
    }
    friend bool operator<(const ChainPoint& a, const ChainPoint& b) {
        return a.value < b.value;
    }
    friend bool operator<=(const ChainPoint& a, const ChainPoint& b) {
        return a.value <= b.value;
    }
    friend bool operator>(const ChainPoint& a, const ChainPoint& b) { return b < a; }
    friend bool operator>=(const ChainPoint& a, const ChainPoint& b) { return b <= a; }
    friend bool operator!=(const ChainPoint& a, const ChainPoint& b) { return !(a == b); }
};

/// Midpoint witness of density. EmptyInterval unless x < y.
ChainPoint between(const ChainPoint& x, const ChainPoint& y);

/// Increasing piecewise-linear bijection of the rational line: the
/// computable stand-in for Aut(Q). Pieces join continuously; the piece
/// below the first breakpoint is pieces[0].
class PLAutomorphism {
public:
    struct Piece {
        Rational slope;  // > 0
        Rational offset; // value(x) = slope * x + offset
    };

    /// Identity map.
    PLAutomorphism();

    /// breakpoints strictly increasing; slopes.size() == breakpoints.size()+1;
    /// offsets derived from continuity with the leftmost piece anchored by
    /// offset0.
    PLAutomorphism(std::vector<Rational> breakpoints, std::vector<Rational> slopes,
                   Rational offset0);

    static PLAutomorphism identity();
    static PLAutomorphism shift(const Rational& c);

    ChainPoint apply(const ChainPoint& x) const;
    ChainPoint apply_inverse(const ChainPoint& y) const;

    PLAutomorphism inverse() const;
    /// (f.compose(g))(x) = f(g(x))
    PLAutomorphism compose(const PLAutomorphism& g) const;

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    bool is_identity() const;

private:
    PLAutomorphism(std::vector<Rational> breakpoints, std::vector<Piece> pieces);
    void validate() const;

    std::vector<Rational> breakpoints_; // size n
    std::vector<Piece> pieces_;         // size n + 1
};

} // namespace hahnexp

#endif
