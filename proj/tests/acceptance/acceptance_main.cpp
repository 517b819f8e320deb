// Runs the nine acceptance criteria and prints one line per criterion.
// Usage: acceptance [--seed N] [--verbose]
#include "lpgeom/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = lpg::acceptance::kDefaultSeed;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (!std::strcmp(argv[i], "--verbose")) {
            verbose = true;
        } else {
            std::fprintf(stderr, "usage: %s [--seed N] [--verbose]\n", argv[0]);
            return 2;
        }
    }
    try {
        int failed = 0;
        for (const auto& r : lpg::acceptance::run_all(seed)) {
            const double t = r.timings.empty() ? 0.0 : r.timings.front().second;
            std::printf("%s %s %.3f s\n", r.pass() ? "PASS" : "FAIL", r.subject.c_str(), t);
            if (!r.pass() || verbose) {
                for (const auto& c : r.checks)
                    if (!c.pass || verbose)
                        std::printf("    %s %s%s%s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                                    c.residual.empty() ? "" : "  ", c.residual.c_str());
            }
            failed += !r.pass();
        }
        std::fflush(stdout);
        return failed ? 1 : 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: %s\n", e.what());
        return 2;
    }
}
