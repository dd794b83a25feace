#include "hahnexp/chain.hpp"

#include <algorithm>

#include "hahnexp/errors.hpp"

namespace hahnexp {

ChainPoint between(const ChainPoint& x, const ChainPoint& y) {
    if (!(x < y))
        throw EmptyInterval("between(" + rational_to_string(x.value) + ", " +
                            rational_to_string(y.value) + ")");
    return ChainPoint((x.value + y.value) / 2);
}

PLAutomorphism::PLAutomorphism() : pieces_{{Rational(1), Rational(0)}} {}

PLAutomorphism::PLAutomorphism(std::vector<Rational> breakpoints,
                               std::vector<Rational> slopes, Rational offset0)
    : breakpoints_(std::move(breakpoints)) {
    if (slopes.size() != breakpoints_.size() + 1)
        throw Error("InvalidAutomorphism", "need one slope per piece");
    pieces_.reserve(slopes.size());
    pieces_.push_back({slopes[0], std::move(offset0)});
    for (size_t i = 0; i < breakpoints_.size(); ++i) {
        // continuity at breakpoint b: s_i*b + o_i = s_{i+1}*b + o_{i+1}
        const Rational& b = breakpoints_[i];
        Rational value_at_b = pieces_[i].slope * b + pieces_[i].offset;
        pieces_.push_back({slopes[i + 1], value_at_b - slopes[i + 1] * b});
    }
    validate();
}

PLAutomorphism::PLAutomorphism(std::vector<Rational> breakpoints,
                               std::vector<Piece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    validate();
}

void PLAutomorphism::validate() const {
    if (pieces_.size() != breakpoints_.size() + 1)
        throw Error("InvalidAutomorphism", "piece/breakpoint count mismatch");
    for (size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1] < breakpoints_[i]))
            throw Error("InvalidAutomorphism", "breakpoints not strictly increasing");
    for (const Piece& p : pieces_)
        if (!(p.slope > 0))
            throw Error("InvalidAutomorphism", "non-positive slope");
    for (size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational& b = breakpoints_[i];
        if (pieces_[i].slope * b + pieces_[i].offset !=
            pieces_[i + 1].slope * b + pieces_[i + 1].offset)
            throw Error("InvalidAutomorphism", "pieces do not join continuously");
    }
}

PLAutomorphism PLAutomorphism::identity() { return PLAutomorphism(); }

PLAutomorphism PLAutomorphism::shift(const Rational& c) {
    return PLAutomorphism({}, {{Rational(1), c}});
}

ChainPoint PLAutomorphism::apply(const ChainPoint& x) const {
    size_t i = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x.value) -
               breakpoints_.begin();
    return ChainPoint(pieces_[i].slope * x.value + pieces_[i].offset);
}

ChainPoint PLAutomorphism::apply_inverse(const ChainPoint& y) const {
    // breakpoint images are increasing, so locate the piece by image
    size_t i = 0;
    while (i < breakpoints_.size() &&
           pieces_[i].slope * breakpoints_[i] + pieces_[i].offset < y.value)
        ++i;
    return ChainPoint((y.value - pieces_[i].offset) / pieces_[i].slope);
}

PLAutomorphism PLAutomorphism::inverse() const {
    std::vector<Rational> bps;
    bps.reserve(breakpoints_.size());
    for (size_t i = 0; i < breakpoints_.size(); ++i)
        bps.push_back(pieces_[i].slope * breakpoints_[i] + pieces_[i].offset);
    std::vector<Piece> ps;
    ps.reserve(pieces_.size());
    for (const Piece& p : pieces_)
        ps.push_back({Rational(1) / p.slope, -p.offset / p.slope});
    return PLAutomorphism(std::move(bps), std::move(ps));
}

PLAutomorphism PLAutomorphism::compose(const PLAutomorphism& g) const {
    // breakpoints of f∘g: those of g plus g^{-1}(breakpoints of f)
    std::vector<Rational> bps;
    for (const Rational& b : g.breakpoints_) bps.push_back(b);
    for (const Rational& b : breakpoints_)
        bps.push_back(g.apply_inverse(ChainPoint(b)).value);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    std::vector<Piece> ps;
    ps.reserve(bps.size() + 1);
    auto piece_at = [](const PLAutomorphism& m, const Rational& x) {
        size_t i = std::upper_bound(m.breakpoints_.begin(), m.breakpoints_.end(), x) -
                   m.breakpoints_.begin();
        return m.pieces_[i];
    };
    for (size_t i = 0; i <= bps.size(); ++i) {
        // sample point interior to piece i
        Rational x;
        if (bps.empty())
            x = 0;
        else if (i == 0)
            x = bps.front() - 1;
        else if (i == bps.size())
            x = bps.back() + 1;
        else
            x = (bps[i - 1] + bps[i]) / 2;
        Piece pg = piece_at(g, x);
        Piece pf = piece_at(*this, pg.slope * x + pg.offset);
        ps.push_back({pf.slope * pg.slope, pf.slope * pg.offset + pf.offset});
    }
    return PLAutomorphism(std::move(bps), std::move(ps));
}

bool PLAutomorphism::is_identity() const {
    for (const Piece& p : pieces_)
        if (p.slope != 1 || p.offset != 0) return false;
    return true;
}

} // namespace hahnexp
