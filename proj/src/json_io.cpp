#include "hahnexp/json_io.hpp"

#include "hahnexp/errors.hpp"

namespace hahnexp {

namespace {

Rational rational_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    auto q = parse_rational(j.get<std::string>());
    if (!q) throw ParseError(std::string("bad rational for ") + what + ": " +
                             j.get<std::string>());
    return *q;
}

Scalar scalar_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw ParseError("coefficient must be a string");
    return parse_scalar(j.get<std::string>());
}

} // namespace

nlohmann::json hahn_to_json(const HahnElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : e.terms())
        terms.push_back({{"idx", rational_to_string(t.idx.value)},
                         {"coef", scalar_to_string(t.coeff)}});
    return {{"terms", std::move(terms)}};
}

HahnElement hahn_from_json(const nlohmann::json& j, bool lenient) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("Hahn element must be {\"terms\": [...]}");
    std::vector<HahnElement::Term> terms;
    for (const auto& tj : j["terms"]) {
        ChainPoint idx(rational_from_json(tj.at("idx"), "idx"));
        Scalar coeff = scalar_from_json(tj.at("coef"));
        if (!lenient) {
            if (coeff.is_zero()) throw ParseError("zero coefficient term");
            if (!terms.empty() && !(terms.back().idx < idx))
                throw ParseError("term indices not strictly increasing");
        }
        terms.push_back({std::move(idx), std::move(coeff)});
    }
    return HahnElement(std::move(terms)); // normalizes in lenient case
}

nlohmann::json series_to_json(const SeriesElement& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : s.terms())
        terms.push_back({{"exp", hahn_to_json(t.exponent)},
                         {"coef", scalar_to_string(t.coeff)}});
    nlohmann::json j{{"terms", std::move(terms)}};
    j["trunc"] = s.trunc() ? hahn_to_json(*s.trunc()) : nlohmann::json(nullptr);
    return j;
}

SeriesElement series_from_json(const nlohmann::json& j, bool lenient) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("series must be {\"terms\": [...], \"trunc\": ...}");
    std::vector<SeriesElement::Term> terms;
    for (const auto& tj : j["terms"]) {
        HahnElement exponent = hahn_from_json(tj.at("exp"), lenient);
        Scalar coeff = scalar_from_json(tj.at("coef"));
        if (!lenient) {
            if (coeff.is_zero()) throw ParseError("zero coefficient term");
            if (!terms.empty() && !exponent_less(terms.back().exponent, exponent))
                throw ParseError("term exponents not strictly increasing");
        }
        terms.push_back({std::move(exponent), std::move(coeff)});
    }
    std::optional<HahnElement> trunc;
    if (j.contains("trunc") && !j["trunc"].is_null())
        trunc = hahn_from_json(j["trunc"], lenient);
    return SeriesElement(std::move(terms), std::move(trunc));
}

nlohmann::json pl_to_json(const PLAutomorphism& a) {
    nlohmann::json out = nlohmann::json::array();
    const auto& bps = a.breakpoints();
    const auto& ps = a.pieces();
    for (size_t i = 0; i < ps.size(); ++i) {
        nlohmann::json triple = nlohmann::json::array();
        triple.push_back(i == 0 ? nlohmann::json(nullptr)
                                : nlohmann::json(rational_to_string(bps[i - 1])));
        triple.push_back(rational_to_string(ps[i].slope));
        triple.push_back(rational_to_string(ps[i].offset));
        out.push_back(std::move(triple));
    }
    return out;
}

PLAutomorphism pl_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("automorphism must be a non-empty list of triples");
    std::vector<Rational> breakpoints, slopes;
    Rational offset0;
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& triple = j[i];
        if (!triple.is_array() || triple.size() != 3)
            throw ParseError("each piece must be a (breakpoint, slope, offset) triple");
        if (i == 0) {
            if (!triple[0].is_null())
                throw ParseError("first piece must have null breakpoint");
            offset0 = rational_from_json(triple[2], "offset");
        } else {
            breakpoints.push_back(rational_from_json(triple[0], "breakpoint"));
        }
        slopes.push_back(rational_from_json(triple[1], "slope"));
    }
    PLAutomorphism a(std::move(breakpoints), std::move(slopes), std::move(offset0));
    // offsets beyond the first are implied by continuity; verify they match
    for (size_t i = 1; i < j.size(); ++i) {
        Rational given = rational_from_json(j[i][2], "offset");
        if (a.pieces()[i].offset != given)
            throw ParseError("offsets do not join continuously");
    }
    return a;
}

} // namespace hahnexp
