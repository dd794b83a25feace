#ifndef HAHNEXP_JSON_IO_HPP
#define HAHNEXP_JSON_IO_HPP

#include <json.hpp>

#include "hahnexp/chain.hpp"
#include "hahnexp/hahn.hpp"
#include "hahnexp/series.hpp"

namespace hahnexp {

// Scalars travel as text: "p/q" for rationals, s-expressions otherwise.

/// {"terms": [{"idx": "p/q", "coef": "<scalar text>"}]}, idx strictly
/// increasing.
nlohmann::json hahn_to_json(const HahnElement& e);
/// lenient: tolerate unsorted terms and strip zero coefficients instead of
/// rejecting them.
HahnElement hahn_from_json(const nlohmann::json& j, bool lenient = false);

/// {"terms": [{"exp": <hahn>, "coef": "<scalar text>"}], "trunc": <hahn|null>}
nlohmann::json series_to_json(const SeriesElement& s);
SeriesElement series_from_json(const nlohmann::json& j, bool lenient = false);

/// List of (breakpoint, slope, offset) triples, one per piece; the first
/// breakpoint is null (the piece below all breakpoints).
nlohmann::json pl_to_json(const PLAutomorphism& a);
PLAutomorphism pl_from_json(const nlohmann::json& j);

} // namespace hahnexp

#endif
