#include "hahnexp/scalar.hpp"

#include <cctype>
#include <vector>

#include "hahnexp/errors.hpp"

namespace hahnexp {

namespace {

// Raised internally when an interval evaluation needs tighter child
// intervals (e.g. a divisor or log argument still straddles 0).
struct NeedRefine {};

Rational pow2_inv(int bits) { return rational_pow(Rational(1, 2), bits); }

} // namespace

SignDecision decide(int sign) {
    SignDecision d;
    d.outcome = sign < 0 ? Sign::Negative : sign > 0 ? Sign::Positive : Sign::Zero;
    d.precision_reached = 0;
    return d;
}

ScalarConfig::ScalarConfig() : cap_width(pow2_inv(64)) {}

ScalarConfig& scalar_config() {
    static ScalarConfig cfg;
    return cfg;
}

// ---------------------------------------------------------------------------
// rational interval primitives

Interval exp_interval(const Rational& a, const Rational& width) {
    if (width <= 0) throw Error("InvalidWidth", "exp_interval needs width > 0");
    if (a == 0) return {Rational(1), Rational(1)};
    if (a < 0 && a >= -1) {
        // Alternating Taylor series with strictly decreasing term magnitudes:
        // consecutive partial sums bracket the value. Refine two extra
        // bracket steps past the first admissible pair so the returned
        // interval lies strictly inside every coarser bracket.
        Rational term = 1, sum = 1;
        unsigned m = 0;
        Rational next = term * a; // t_{m+1}
        while (rat_abs(next) > width) {
            ++m;
            term = next;
            sum += term;
            next = term * a / Rational(m + 1);
        }
        for (unsigned extra = 0; extra < 4; ++extra) {
            ++m;
            term = next;
            sum += term;
            next = term * a / Rational(m + 1);
        }
        Rational s_next = sum + next;
        return sum <= s_next ? Interval{sum, s_next} : Interval{s_next, sum};
    }
    if (a > 0) {
        Rational term = 1, sum = 1;
        unsigned k = 0;
        Rational quarter = width / 4;
        for (;;) {
            ++k;
            term = term * a / Rational(k);
            sum += term;
            Rational next = term * a / Rational(k + 1);
            if (Rational(k + 1) >= 2 * a && next <= quarter) {
                // ratio of successive terms is now <= 1/2, so the tail is
                // bounded by twice the next term
                return {sum, sum + 2 * next};
            }
        }
    }
    // a < -1: exp(a) = 1 / exp(-a)
    Rational inner = width;
    for (;;) {
        Interval e = exp_interval(-a, inner);
        Interval r{Rational(1) / e.hi, Rational(1) / e.lo};
        if (r.width() <= width) return r;
        inner /= 4;
    }
}

namespace {

// log on (0, 2): Mercator series at u = a - 1.
Interval log_near_one(const Rational& a, const Rational& width) {
    Rational u = a - 1;
    if (u == 0) return {Rational(0), Rational(0)};
    if (u > 0) {
        // alternating with strictly decreasing magnitudes since 0 < u < 1,
        // so consecutive partial sums bracket the value
        Rational pw = u, sum = u;
        unsigned k = 1;
        for (;;) {
            Rational pw_next = pw * u;
            Rational term_next = pw_next / Rational(k + 1);
            if (term_next <= width) {
                // sign of term k+1 is (-1)^k
                Rational other = (k % 2 == 1) ? Rational(sum - term_next) : Rational(sum + term_next);
                return other <= sum ? Interval{other, sum} : Interval{sum, other};
            }
            pw = pw_next;
            ++k;
            sum += (k % 2 == 1) ? Rational(pw / Rational(k)) : Rational(-pw / Rational(k));
        }
    }
    // -1 < u < 0: every term of ln(1+u) is -|u|^k/k; remainder after n terms
    // is bounded by |u|^{n+1} / ((n+1)(1-|u|)).
    Rational au = -u;
    Rational one_minus = 1 - au;
    Rational apw = au;       // |u|^k
    Rational sum = u;        // S_1 = -|u|
    unsigned k = 1;
    for (;;) {
        Rational bound = apw * au / (Rational(k + 1) * one_minus);
        if (bound <= width) return {sum - bound, sum};
        apw *= au;
        ++k;
        sum -= apw / Rational(k);
    }
}

} // namespace

Interval log_interval(const Rational& a, const Rational& width) {
    if (a <= 0) throw NonPositiveLogArgument("log_interval of " + rational_to_string(a));
    if (a == 1) return {Rational(0), Rational(0)};
    if (a < 1) {
        Interval r = log_interval(Rational(1) / a, width);
        return {-r.hi, -r.lo};
    }
    // range-reduce by powers of two into [1, 2)
    long m = 0;
    Rational x = a;
    while (x >= 2) { x /= 2; ++m; }
    if (m == 0) return log_near_one(x, width);
    Interval lx = log_near_one(x, width / 2);
    Interval l2 = log_near_one(Rational(3, 2), width / (4 * m)); // log 2 = log(3/2) + log(4/3)
    Interval l43 = log_near_one(Rational(4, 3), width / (4 * m));
    Interval log2{l2.lo + l43.lo, l2.hi + l43.hi};
    return {lx.lo + m * log2.lo, lx.hi + m * log2.hi};
}

Interval nth_root_interval(const Rational& a, unsigned n, const Rational& width) {
    if (a <= 0) throw NonPositiveRadicand("nth_root_interval of " + rational_to_string(a));
    if (n == 0) throw Error("InvalidDegree", "0th root");
    if (n == 1) return {a, a};
    if (auto exact = rational_nth_root(a, n)) return {*exact, *exact};
    Rational lo = 0, hi = a < 1 ? Rational(1) : a;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (rational_pow(mid, static_cast<long>(n)) <= a) lo = mid; else hi = mid;
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(SymPtr sym) : sym_(std::move(sym)), cache_(std::make_shared<Cache>()) {}

namespace {

Scalar from_node(SymOp op, SymPtr lhs, SymPtr rhs, unsigned deg = 0) {
    auto n = std::make_shared<SymNode>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->root_degree = deg;
    return Scalar(SymPtr(n));
}

SymPtr as_node(const Scalar& s) {
    if (!s.is_rational()) return s.sym();
    auto n = std::make_shared<SymNode>();
    n->op = SymOp::Leaf;
    n->leaf = s.rational();
    return n;
}

Scalar node_to_scalar(const SymPtr& n) {
    if (n->op == SymOp::Leaf) return Scalar(n->leaf);
    return Scalar(n);
}

bool nodes_equal(const SymPtr& a, const SymPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    switch (a->op) {
    case SymOp::Leaf: return a->leaf == b->leaf;
    case SymOp::Root:
        return a->root_degree == b->root_degree && nodes_equal(a->lhs, b->lhs);
    case SymOp::Exp:
    case SymOp::Log:
        return nodes_equal(a->lhs, b->lhs);
    default:
        return nodes_equal(a->lhs, b->lhs) && nodes_equal(a->rhs, b->rhs);
    }
}

Interval iv_add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval iv_sub(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval iv_mul(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = p1, hi = p1;
    for (const Rational& p : {p2, p3, p4}) {
        if (p < lo) lo = p;
        if (p > hi) hi = p;
    }
    return {lo, hi};
}

Interval iv_div(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw NeedRefine{};
    return iv_mul(a, {Rational(1) / b.hi, Rational(1) / b.lo});
}

Interval evaluate(const SymPtr& n, int bits) {
    Rational w = pow2_inv(bits);
    switch (n->op) {
    case SymOp::Leaf: return {n->leaf, n->leaf};
    case SymOp::Add: return iv_add(evaluate(n->lhs, bits), evaluate(n->rhs, bits));
    case SymOp::Sub: return iv_sub(evaluate(n->lhs, bits), evaluate(n->rhs, bits));
    case SymOp::Mul: return iv_mul(evaluate(n->lhs, bits), evaluate(n->rhs, bits));
    case SymOp::Div: return iv_div(evaluate(n->lhs, bits), evaluate(n->rhs, bits));
    case SymOp::Exp: {
        Interval c = evaluate(n->lhs, bits);
        return {exp_interval(c.lo, w).lo, exp_interval(c.hi, w).hi};
    }
    case SymOp::Log: {
        Interval c = evaluate(n->lhs, bits);
        if (c.lo <= 0) throw NeedRefine{};
        return {log_interval(c.lo, w).lo, log_interval(c.hi, w).hi};
    }
    case SymOp::Root: {
        Interval c = evaluate(n->lhs, bits);
        if (c.lo <= 0) throw NeedRefine{};
        return {nth_root_interval(c.lo, n->root_degree, w).lo,
                nth_root_interval(c.hi, n->root_degree, w).hi};
    }
    }
    throw Error("Internal", "unreachable sym op");
}

} // namespace

Interval Scalar::cached() const {
    if (is_rational()) return {rat_, rat_};
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->valid) return cache_->iv;
    throw Error("Internal", "no cached interval; call refine first");
}

Interval Scalar::refine(const Rational& target_width) const {
    if (is_rational()) return {rat_, rat_};
    const int max_bits = scalar_config().max_refine_bits;
    bool any = false;
    for (int bits = 8; bits <= max_bits; bits *= 2) {
        Interval iv;
        try {
            iv = evaluate(sym_, bits);
        } catch (const NeedRefine&) {
            continue;
        }
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->valid) {
            // monotone nesting: both intervals contain the value
            if (iv.lo > cache_->iv.lo) cache_->iv.lo = iv.lo;
            if (iv.hi < cache_->iv.hi) cache_->iv.hi = iv.hi;
        } else {
            cache_->iv = iv;
            cache_->valid = true;
        }
        any = true;
        if (cache_->iv.width() <= target_width) return cache_->iv;
    }
    if (!any) throw UndecidedSign("interval evaluation never separated a divisor from 0");
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->iv;
}

bool Scalar::structurally_equal(const Scalar& other) const {
    if (is_rational() && other.is_rational()) return rat_ == other.rat_;
    if (is_rational() != other.is_rational()) return false;
    return nodes_equal(sym_, other.sym_);
}

SignDecision scalar_sign(const Scalar& a) {
    if (a.is_rational()) return decide(sign_of(a.rational()));
    const Rational cap = scalar_config().cap_width;
    Rational target = 1;
    for (;;) {
        Interval iv = a.refine(target);
        if (iv.lo > 0) return decide(1);
        if (iv.hi < 0) return decide(-1);
        if (iv.lo == 0 && iv.hi == 0) return decide(0);
        if (iv.width() <= cap) {
            SignDecision d;
            d.outcome = Sign::Undecided;
            d.precision_reached = iv.width();
            return d;
        }
        if (target <= cap) {
            // refinement exhausted max_refine_bits above the cap
            SignDecision d;
            d.outcome = Sign::Undecided;
            d.precision_reached = iv.width();
            return d;
        }
        target = target / 256 < cap ? cap : target / 256;
    }
}

SignDecision scalar_cmp(const Scalar& a, const Scalar& b) {
    return scalar_sign(scalar_sub(a, b));
}

// ---------------------------------------------------------------------------
// normalized constructors

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() + b.rational());
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return from_node(SymOp::Add, as_node(a), as_node(b));
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() - b.rational());
    if (b.is_zero()) return a;
    if (a.structurally_equal(b)) return Scalar(0);
    return from_node(SymOp::Sub, as_node(a), as_node(b));
}

Scalar scalar_neg(const Scalar& a) { return scalar_sub(Scalar(0), a); }

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() * b.rational());
    if (a.is_zero() || b.is_zero()) return Scalar(0);
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    // exp-sum fusion: exp(x) * exp(y) -> exp(x + y)
    if (!a.is_rational() && !b.is_rational() && a.sym()->op == SymOp::Exp &&
        b.sym()->op == SymOp::Exp) {
        return scalar_exp(scalar_add(node_to_scalar(a.sym()->lhs),
                                     node_to_scalar(b.sym()->lhs)));
    }
    return from_node(SymOp::Mul, as_node(a), as_node(b));
}

Scalar scalar_div(const Scalar& a, const Scalar& b) {
    SignDecision bs = scalar_sign(b);
    if (bs.outcome == Sign::Zero) throw DivisionByZero("scalar division by zero");
    if (bs.outcome == Sign::Undecided)
        throw UndecidedSign("divisor indistinguishable from 0 at precision cap");
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() / b.rational());
    if (b.is_one()) return a;
    if (a.is_zero()) return Scalar(0);
    if (!a.is_rational() && !b.is_rational() && a.sym()->op == SymOp::Exp &&
        b.sym()->op == SymOp::Exp) {
        return scalar_exp(scalar_sub(node_to_scalar(a.sym()->lhs),
                                     node_to_scalar(b.sym()->lhs)));
    }
    // (x * y) / x -> y
    if (!a.is_rational() && a.sym()->op == SymOp::Mul) {
        Scalar l = node_to_scalar(a.sym()->lhs);
        Scalar r = node_to_scalar(a.sym()->rhs);
        if (l.structurally_equal(b)) return r;
        if (r.structurally_equal(b)) return l;
    }
    return from_node(SymOp::Div, as_node(a), as_node(b));
}

Scalar scalar_exp(const Scalar& a) {
    if (a.is_zero()) return Scalar(1);
    return from_node(SymOp::Exp, as_node(a), nullptr);
}

Scalar scalar_log(const Scalar& a) {
    SignDecision s = scalar_sign(a);
    if (s.outcome == Sign::Undecided)
        throw UndecidedSign("log argument indistinguishable from 0");
    if (s.outcome != Sign::Positive)
        throw NonPositiveLogArgument("log of " + scalar_to_string(a));
    if (a.is_one()) return Scalar(0);
    if (!a.is_rational() && a.sym()->op == SymOp::Exp)
        return node_to_scalar(a.sym()->lhs); // log(exp(x)) -> x
    return from_node(SymOp::Log, as_node(a), nullptr);
}

Scalar scalar_nth_root(const Scalar& a, unsigned n, ScalarMode mode) {
    if (n == 0) throw Error("InvalidDegree", "0th root");
    SignDecision s = scalar_sign(a);
    if (s.outcome == Sign::Undecided)
        throw UndecidedSign("radicand indistinguishable from 0");
    if (s.outcome != Sign::Positive)
        throw NonPositiveRadicand("nth_root of " + scalar_to_string(a));
    if (n == 1) return a;
    if (a.is_rational()) {
        if (auto exact = rational_nth_root(a.rational(), n)) return Scalar(*exact);
        if (mode == ScalarMode::RationalOnly)
            throw NotRepresentable("no rational " + std::to_string(n) + "th root of " +
                                   rational_to_string(a.rational()));
    }
    return from_node(SymOp::Root, as_node(a), nullptr, n);
}

// ---------------------------------------------------------------------------
// text form

namespace {

void print_node(const SymPtr& n, std::string& out) {
    switch (n->op) {
    case SymOp::Leaf: out += rational_to_string(n->leaf); return;
    case SymOp::Add: out += "(add "; break;
    case SymOp::Sub: out += "(sub "; break;
    case SymOp::Mul: out += "(mul "; break;
    case SymOp::Div: out += "(div "; break;
    case SymOp::Exp: out += "(exp "; break;
    case SymOp::Log: out += "(log "; break;
    case SymOp::Root: out += "(root "; break;
    }
    print_node(n->lhs, out);
    if (n->rhs) {
        out += ' ';
        print_node(n->rhs, out);
    }
    if (n->op == SymOp::Root) {
        out += ' ';
        out += std::to_string(n->root_degree);
    }
    out += ')';
}

struct SexprParser {
    const std::string& text;
    size_t pos = 0;

    explicit SexprParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos));
    }

    std::string atom() {
        size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(' && text[pos] != ')')
            ++pos;
        if (start == pos) fail("expected atom");
        return text.substr(start, pos - start);
    }

    Scalar term() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        if (text[pos] != '(') {
            auto q = parse_rational(atom());
            if (!q) fail("bad rational literal");
            return Scalar(*q);
        }
        ++pos; // '('
        skip_ws();
        std::string op = atom();
        if (op == "exp" || op == "log") {
            Scalar x = term();
            expect_close();
            return op == "exp" ? scalar_exp(x) : scalar_log(x);
        }
        if (op == "root") {
            Scalar x = term();
            skip_ws();
            std::string ns = atom();
            unsigned n = 0;
            try {
                n = static_cast<unsigned>(std::stoul(ns));
            } catch (const std::exception&) {
                fail("bad root degree");
            }
            expect_close();
            return scalar_nth_root(x, n);
        }
        Scalar a = term();
        Scalar b = term();
        expect_close();
        if (op == "add") return scalar_add(a, b);
        if (op == "sub") return scalar_sub(a, b);
        if (op == "mul") return scalar_mul(a, b);
        if (op == "div") return scalar_div(a, b);
        fail("unknown operator '" + op + "'");
    }

    void expect_close() {
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
    }
};

} // namespace

std::string scalar_to_string(const Scalar& s) {
    if (s.is_rational()) return rational_to_string(s.rational());
    std::string out;
    print_node(s.sym(), out);
    return out;
}

std::string Scalar::to_string() const { return scalar_to_string(*this); }

Scalar parse_scalar(const std::string& text) {
    SexprParser p(text);
    Scalar s = p.term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return s;
}

} // namespace hahnexp
