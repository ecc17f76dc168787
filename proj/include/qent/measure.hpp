#pragma once

#include <optional>
#include <vector>

#include "qent/correlation.hpp"

namespace qent {

struct MeasureResult {
    std::vector<int> sites;
    double raw;            // sum of squared connected-tensor entries
    double normalization;  // N(m)
    double value;          // raw / normalization
};

/// N(m) fixed by requiring B = 1 on the m-site GHZ analog of local dimension
/// d: raw_sum((sum_k |k...k>)/sqrt(d), all m sites). Cached; thread-safe.
/// Known qubit values: N(2) = 3, N(3) = 4, N(4) = 12.
double calibrate_normalization(int m, int d = 2);

/// B(S) = raw_sum(S) / N. Without an explicit normalization every site of S
/// must share one local dimension d, and N = calibrate_normalization(|S|, d).
MeasureResult measure_B(const PureState& s, const std::vector<int>& subset,
                        std::optional<double> normalization = std::nullopt,
                        const TensorOptions& opts = {});
MeasureResult measure_B(const DensityMatrix& rho, const std::vector<int>& subset,
                        std::optional<double> normalization = std::nullopt,
                        const TensorOptions& opts = {});

}  // namespace qent
