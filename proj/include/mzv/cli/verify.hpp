#ifndef MZV_CLI_VERIFY_HPP
#define MZV_CLI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mzv::cli
{

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;    // deterministic summary of what was checked
    double seconds = 0;    // wall time; not part of the rendered report
    double time_limit = 0; // seconds, 0 for none
};

struct BatteryOptions {
    std::uint64_t seed = 20240611;
    int lemma_trials = 1000;
};

inline constexpr int criterion_count = 10;

// Runs acceptance item id (1..10). Memoized evaluations are dropped first so
// timings are cold. Exceptions inside a check are reported as failures.
CriterionResult run_criterion(int id, const BatteryOptions &opts = {});

std::vector<CriterionResult> run_battery(const BatteryOptions &opts = {});

// "[PASS] 3 Euler/duality: ..." per line; no timings, so reports are
// reproducible.
std::string render_battery(const std::vector<CriterionResult> &results);

} // namespace mzv::cli

#endif
