// Acceptance gate: one line per criterion, nonzero exit on any miss.
//
// Each criterion runs a randomized check suite with the default
// configuration (fixed seed) and must finish green inside its time budget.

#include <cstdint>
#include <cstdio>

#include "hahnexp/suites.hpp"

namespace {

struct Criterion {
    int number;
    const char* suite;
    std::uint64_t budget_ms;
};

const Criterion kCriteria[] = {
    {1, "taylor", 1000},        {2, "vcompat", 5000},
    {3, "oracle", 10000},       {4, "invroot", 10000},
    {5, "homomorphism", 20000}, {6, "ga-strong", 30000},
    {7, "centripetal", 10000},  {8, "roundtrip", 5000},
    {9, "lifting", 5000},       {10, "induced-h", 5000},
    {11, "pseudo-limit", 5000}, {12, "exp-ode", 5000},
};

} // namespace

int main() {
    int failed = 0;
    for (const Criterion& c : kCriteria) {
        std::string status;
        hahnexp::CheckReport r;
        try {
            r = hahnexp::run_suite(c.suite, hahnexp::SuiteConfig{});
            if (!r.ok())
                status = "checks";
            else if (r.wall_time_ms > c.budget_ms)
                status = "budget";
        } catch (const std::exception& e) {
            status = std::string("error: ") + e.what();
        }
        bool ok = status.empty();
        failed += !ok;
        std::printf("%s criterion %02d %-13s instances=%llu passes=%llu "
                    "failures=%zu undecided=%llu time=%llums budget=%llums%s%s\n",
                    ok ? "PASS" : "FAIL", c.number, c.suite,
                    static_cast<unsigned long long>(r.instances),
                    static_cast<unsigned long long>(r.passes), r.failures.size(),
                    static_cast<unsigned long long>(r.undecided),
                    static_cast<unsigned long long>(r.wall_time_ms),
                    static_cast<unsigned long long>(c.budget_ms),
                    ok ? "" : " reason=", status.c_str());
        if (!ok && !r.failures.empty())
            std::printf("     first witness: %s\n", r.failures.front().dump().c_str());
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed ? 1 : 0;
}
