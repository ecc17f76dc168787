#include "qent/props.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qent/correlation.hpp"
#include "qent/errors.hpp"
#include "qent/measure.hpp"
#include "qent/random_states.hpp"

namespace qent {

namespace {

std::vector<int> random_subset(StateSampler& sampler, int n, int size) {
    std::vector<int> sites(static_cast<std::size_t>(n));
    std::iota(sites.begin(), sites.end(), 1);
    for (int k = 0; k < size; ++k) {
        const int j = sampler.uniform_int(k, n - 1);
        std::swap(sites[static_cast<std::size_t>(k)], sites[static_cast<std::size_t>(j)]);
    }
    sites.resize(static_cast<std::size_t>(size));
    std::sort(sites.begin(), sites.end());
    return sites;
}

std::string describe(int trial, const QuditRegister& reg, const std::vector<int>& subset) {
    std::ostringstream os;
    os << "trial " << trial << ", dims [";
    for (std::size_t k = 0; k < reg.dims().size(); ++k)
        os << (k ? "," : "") << reg.dims()[k];
    os << "], subset {";
    for (std::size_t k = 0; k < subset.size(); ++k) os << (k ? "," : "") << subset[k];
    os << "}";
    return os.str();
}

using Trial = std::pair<double, std::string>;  // deviation, description

Trial separable_zero_trial(StateSampler& sampler, int trial) {
    const bool qutrits = trial % 4 == 3;
    const int n = qutrits ? sampler.uniform_int(2, 3) : sampler.uniform_int(2, 4);
    const QuditRegister reg = QuditRegister::uniform(n, qutrits ? 3 : 2);
    const PureState s = sampler.product_state(reg);
    const auto subset = random_subset(sampler, n, sampler.uniform_int(2, n));
    return {measure_B(s, subset).value, describe(trial, reg, subset)};
}

Trial nonneg_trial(StateSampler& sampler, int trial) {
    const int n = sampler.uniform_int(2, 4);
    const QuditRegister reg = QuditRegister::qubits(n);
    const PureState s = sampler.haar_state(reg);
    const auto subset = random_subset(sampler, n, sampler.uniform_int(2, n));
    return {std::max(0.0, -measure_B(s, subset).value), describe(trial, reg, subset)};
}

Trial lu_invariance_trial(StateSampler& sampler, int trial) {
    const int n = sampler.uniform_int(3, 4);
    const QuditRegister reg = QuditRegister::qubits(n);
    PureState s = sampler.haar_state(reg);
    const auto subset = random_subset(sampler, n, sampler.uniform_int(2, n));
    const double before = measure_B(s, subset).value;
    for (int site = 1; site <= n; ++site)
        s = apply_site_matrix(s, site, sampler.haar_unitary(reg.dim(site)));
    const double after = measure_B(s, subset).value;
    return {std::abs(before - after), describe(trial, reg, subset)};
}

Trial product_cut_trial(StateSampler& sampler, int trial) {
    const int n = 4;
    const int cut = sampler.uniform_int(1, 3);  // factor A = sites 1..cut
    const PureState a = sampler.haar_state(QuditRegister::qubits(cut));
    const PureState b = sampler.haar_state(QuditRegister::qubits(n - cut));
    const PureState s = tensor_product(a, b);
    // Subset with at least one site on each side of the cut.
    const int left = sampler.uniform_int(1, cut);
    const int right = sampler.uniform_int(cut + 1, n);
    std::vector<int> subset{left, right};
    for (int site = 1; site <= n; ++site)
        if (site != left && site != right && sampler.uniform_int(0, 1) == 1)
            subset.push_back(site);
    std::sort(subset.begin(), subset.end());
    return {connected_tensor(s, subset).max_abs(), describe(trial, s.reg(), subset)};
}

Trial permutation_trial(StateSampler& sampler, int trial) {
    const int n = 4;
    const QuditRegister reg = QuditRegister::qubits(n);
    const PureState s = sampler.haar_state(reg);
    const auto subset = random_subset(sampler, n, sampler.uniform_int(2, n));

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int k = 0; k < n - 1; ++k)
        std::swap(perm[static_cast<std::size_t>(k)],
                  perm[static_cast<std::size_t>(sampler.uniform_int(k, n - 1))]);
    const PureState permuted = permute_sites(s, perm);
    std::vector<int> inverse(static_cast<std::size_t>(n));  // old site -> new position
    for (int k = 0; k < n; ++k) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)] - 1)] = k + 1;
    std::vector<int> mapped;
    for (int site : subset) mapped.push_back(inverse[static_cast<std::size_t>(site - 1)]);
    std::sort(mapped.begin(), mapped.end());

    const double before = measure_B(s, subset).value;
    const double after = measure_B(permuted, mapped).value;
    return {std::abs(before - after), describe(trial, reg, subset)};
}

}  // namespace

const std::vector<std::string>& property_check_names() {
    static const std::vector<std::string> names{"separable-zero", "nonneg", "lu-invariance",
                                                "product-cut", "permutation"};
    return names;
}

PropertyReport run_property_check(const std::string& check, int trials, std::uint64_t seed) {
    if (trials < 1) throw ShapeError("trial count must be positive");
    PropertyReport report;
    report.check = check;
    report.trials = trials;
    report.seed = seed;

    Trial (*run)(StateSampler&, int) = nullptr;
    if (check == "separable-zero") {
        run = separable_zero_trial;
        report.threshold = 1e-10;
    } else if (check == "nonneg") {
        run = nonneg_trial;
        report.threshold = 0.0;
    } else if (check == "lu-invariance") {
        run = lu_invariance_trial;
        report.threshold = 1e-9;
    } else if (check == "product-cut") {
        run = product_cut_trial;
        report.threshold = 1e-10;
    } else if (check == "permutation") {
        run = permutation_trial;
        report.threshold = 1e-12;
    } else {
        throw ParseError("unknown property check \"" + check + "\"");
    }

    StateSampler sampler(seed);
    for (int t = 0; t < trials; ++t) {
        const auto [deviation, description] = run(sampler, t);
        if (deviation > report.worst_deviation || report.worst_case.empty()) {
            report.worst_deviation = deviation;
            report.worst_case = description;
        }
    }
    report.passed = report.worst_deviation <= report.threshold;
    return report;
}

}  // namespace qent
