#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pickbody {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Full randomized property battery with a fixed seed.  tol_override > 0
/// loosens every per-property tolerance that is tighter than it.
std::vector<PropertyResult> run_selftest(std::uint64_t seed, double tol_override = 0.0);

}  // namespace pickbody
