#include "qent/measure.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "qent/catalog.hpp"
#include "qent/errors.hpp"

namespace qent {

double calibrate_normalization(int m, int d) {
    if (m < 2) throw ShapeError("normalization needs at least 2 sites");
    if (d < 2) throw ShapeError("normalization needs local dimension >= 2");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, double> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find({m, d}); it != cache.end()) return it->second;
    }
    const PureState ghz = catalog::ghz_qudit(m, d);
    std::vector<int> all(static_cast<std::size_t>(m));
    std::iota(all.begin(), all.end(), 1);
    TensorOptions opts;
    opts.max_subset_sites = std::max(opts.max_subset_sites, m);
    const double n = raw_sum(ghz, all, opts);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::pair{m, d}, n);
    return n;
}

namespace {

template <typename StateT>
MeasureResult measure_impl(const StateT& state, const std::vector<int>& subset,
                           std::optional<double> normalization, const TensorOptions& opts) {
    state.reg().check_subset(subset);
    if (subset.size() < 2) throw ShapeError("the measure needs at least 2 sites");
    double n;
    if (normalization) {
        n = *normalization;
        if (!(n > 0.0)) throw ShapeError("normalization must be positive");
    } else {
        const int d = state.reg().dim(subset.front());
        for (int s : subset)
            if (state.reg().dim(s) != d)
                throw ShapeError(
                    "sites of mixed local dimension need an explicit normalization");
        n = calibrate_normalization(static_cast<int>(subset.size()), d);
    }
    const double raw = raw_sum(state, subset, opts);
    return MeasureResult{subset, raw, n, raw / n};
}

}  // namespace

MeasureResult measure_B(const PureState& s, const std::vector<int>& subset,
                        std::optional<double> normalization, const TensorOptions& opts) {
    return measure_impl(s, subset, normalization, opts);
}

MeasureResult measure_B(const DensityMatrix& rho, const std::vector<int>& subset,
                        std::optional<double> normalization, const TensorOptions& opts) {
    return measure_impl(rho, subset, normalization, opts);
}

}  // namespace qent
