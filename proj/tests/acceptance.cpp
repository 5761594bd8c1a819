// Acceptance battery: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include <mzv/cli/verify.hpp>

int main(int argc, char **argv)
{
    mzv::cli::BatteryOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a.rfind("--seed=", 0) == 0) {
            opts.seed = std::stoull(a.substr(7));
        }
    }
    int failed = 0;
    for (int id = 1; id <= mzv::cli::criterion_count; ++id) {
        const auto r = mzv::cli::run_criterion(id, opts);
        std::printf("%s criterion %d (%s): %s [%.2fs", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.detail.c_str(), r.seconds);
        if (r.time_limit > 0) {
            std::printf(", limit %.0fs", r.time_limit);
        }
        std::printf("]\n");
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", mzv::cli::criterion_count - failed, mzv::cli::criterion_count);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
