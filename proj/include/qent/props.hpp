#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qent {

/// Outcome of one randomized property suite.
struct PropertyReport {
    std::string check;
    int trials = 0;
    std::uint64_t seed = 0;
    double threshold = 0.0;
    double worst_deviation = 0.0;
    std::string worst_case;  // description of the worst trial
    bool passed = false;
};

/// Names accepted by run_property_check.
const std::vector<std::string>& property_check_names();

/// Runs one named randomized suite:
///   separable-zero : B vanishes on fully product states      (< 1e-10)
///   nonneg         : B >= 0 on random states                 (>= 0)
///   lu-invariance  : B unchanged by per-site unitaries       (< 1e-9)
///   product-cut    : connected tensor vanishes across a
///                    product cut                             (< 1e-10)
///   permutation    : B consistent under site relabeling      (< 1e-12)
PropertyReport run_property_check(const std::string& check, int trials, std::uint64_t seed);

}  // namespace qent
