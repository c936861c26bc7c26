#pragma once

#include <string>
#include <vector>

namespace polyqd::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

enum class Level { quick, exhaustive };

// Enumeration-backed invariant battery: field axioms, sigma duality,
// shift bijection, variety moments, transform identities, decoder
// cross-checks. quick trims the exhaustive ranges.
std::vector<CheckResult> run(Level level);

}  // namespace polyqd::selftest
