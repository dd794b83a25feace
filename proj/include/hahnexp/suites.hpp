#ifndef HAHNEXP_SUITES_HPP
#define HAHNEXP_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hahnexp/exp_field.hpp"
#include "hahnexp/generate.hpp"
#include "hahnexp/report.hpp"

namespace hahnexp {

/// Shared knobs for the randomized check suites. samples = 0 selects each
/// suite's documented default.
struct SuiteConfig {
    std::uint64_t seed = 20260824;
    std::uint64_t samples = 0;
    HahnElement cutoff = HahnElement::monomial(ChainPoint(0), Scalar(8));
    std::optional<Rational> precision; // overrides the global refinement cap
    MiddleMode middle = MiddleMode::Symbolic;
};

/// Registered suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Run one named suite. Applies cfg.precision to the global scalar
/// configuration, stamps wall_time_ms and echoes the configuration into the
/// report. Throws ParseError for an unknown name.
CheckReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace hahnexp

#endif
