#ifndef WOUNDLAB_VERIFY_HPP
#define WOUNDLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace woundlab {

enum class CheckStatus { Pass, Fail, Unknown };

std::string status_str(CheckStatus s);

struct CheckResult {
    std::string name;
    std::string anchor; // the mathematical fact being checked
    CheckStatus status = CheckStatus::Unknown;
    std::string details;
};

struct VerificationReport {
    std::string command = "verify";
    int p = 3;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks; // sorted by name
    bool all_passed() const;
};

/// Re-run every anchored computation at the given prime. p = 2 runs the
/// additive/tower subset; checks needing an odd prime (curve pipeline,
/// KMT) report "unknown" there. Never throws: failures become entries.
VerificationReport verify_all(int p, std::uint64_t seed);

} // namespace woundlab

#endif
