#pragma once

#include "lpgeom/report_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

/// The numbered acceptance criteria as verification reports. Each report
/// carries one check per property plus a `runtime` check against the pinned
/// limit; the elapsed time itself goes to `timings`.
namespace lpg::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
};

const std::vector<Criterion>& criteria();

/// Criteria 1 to 8. Throws InvalidArgument for other ids.
io::VerificationReport run(int id, std::uint64_t seed);

/// Structured rendering of reports, concatenated in order.
std::string structured(const std::vector<io::VerificationReport>& reports);

/// Criterion 9: reruns 1 to 8 and compares the structured bytes with
/// `reference` (a previous structured() of the same seed).
io::VerificationReport determinism(std::uint64_t seed, const std::string& reference);

/// All nine, criterion 9 comparing the first pass against a second one.
std::vector<io::VerificationReport> run_all(std::uint64_t seed);

} // namespace lpg::acceptance
