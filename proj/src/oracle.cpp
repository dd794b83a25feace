#include "hahnexp/oracle.hpp"

namespace hahnexp {

namespace {

void add_term(LaurentPoly& p, const std::vector<long>& mono, const Rational& c) {
    auto it = p.find(mono);
    if (it == p.end()) {
        if (c != 0) p.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

} // namespace

LaurentPoly laurent_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [mono, c] : b) add_term(out, mono, c);
    return out;
}

LaurentPoly laurent_neg(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [mono, c] : a) out.emplace(mono, -c);
    return out;
}

LaurentPoly laurent_sub(const LaurentPoly& a, const LaurentPoly& b) {
    return laurent_add(a, laurent_neg(b));
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<long> mono(ma.size());
            for (size_t i = 0; i < ma.size(); ++i) mono[i] = ma[i] + mb[i];
            add_term(out, mono, ca * cb);
        }
    return out;
}

int laurent_sign(const LaurentPoly& a) {
    if (a.empty()) return 0;
    return a.begin()->second.sign();
}

int laurent_cmp(const LaurentPoly& a, const LaurentPoly& b) {
    return laurent_sign(laurent_sub(a, b));
}

std::optional<std::vector<long>> laurent_valuation(const LaurentPoly& a) {
    if (a.empty()) return std::nullopt;
    return a.begin()->first;
}

} // namespace hahnexp
