#include "qent/correlation.hpp"

#include <algorithm>
#include <map>

#include "qent/errors.hpp"
#include "qent/expectation.hpp"
#include "qent/generator_basis.hpp"
#include "qent/partitions.hpp"

namespace qent {

CorrelationTensor::CorrelationTensor(std::vector<int> sites, std::vector<int> extents)
    : sites_(std::move(sites)), extents_(std::move(extents)) {
    std::size_t total = 1;
    for (int e : extents_) total *= static_cast<std::size_t>(e);
    values_.assign(total, 0.0);
}

std::size_t CorrelationTensor::flat(std::span<const int> index) const {
    std::size_t f = 0;
    for (std::size_t k = 0; k < extents_.size(); ++k)
        f = f * static_cast<std::size_t>(extents_[k]) + static_cast<std::size_t>(index[k]);
    return f;
}

void CorrelationTensor::unflatten(std::size_t flat_index, std::span<int> index) const {
    for (std::size_t k = extents_.size(); k-- > 0;) {
        index[k] = static_cast<int>(flat_index % static_cast<std::size_t>(extents_[k]));
        flat_index /= static_cast<std::size_t>(extents_[k]);
    }
}

double CorrelationTensor::sum_of_squares() const {
    double acc = 0.0;
    for (double v : values_) acc += v * v;
    return acc;
}

double CorrelationTensor::max_abs() const {
    double acc = 0.0;
    for (double v : values_) acc = std::max(acc, std::abs(v));
    return acc;
}

namespace {

void check_subset_size(const std::vector<int>& subset, const TensorOptions& opts) {
    if (static_cast<int>(subset.size()) > opts.max_subset_sites)
        throw ShapeError("subset of " + std::to_string(subset.size()) +
                         " sites exceeds the dense-tensor cap of " +
                         std::to_string(opts.max_subset_sites) + " (raise max_subset_sites)");
}

std::vector<int> subset_extents(const QuditRegister& reg, const std::vector<int>& subset) {
    std::vector<int> extents;
    extents.reserve(subset.size());
    for (int s : subset) {
        const int d = reg.dim(s);
        extents.push_back(d * d - 1);
    }
    return extents;
}

template <typename StateT>
std::vector<std::vector<double>> site_means(const StateT& state, const std::vector<int>& subset) {
    std::vector<std::vector<double>> means(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        const int d = state.reg().dim(subset[k]);
        means[k].resize(static_cast<std::size_t>(d * d - 1));
        for (int g = 1; g <= d * d - 1; ++g)
            means[k][static_cast<std::size_t>(g - 1)] = expectation(state, {{subset[k], g}});
    }
    return means;
}

// Entry evaluation is independent per index tuple, so the parallel kernel
// writes disjoint slots and is bit-identical to the serial reference.
template <typename EntryFn>
void fill_entries(CorrelationTensor& t, Execution exec, const EntryFn& entry) {
    const auto total = static_cast<std::ptrdiff_t>(t.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t f = 0; f < total; ++f)
            t.values()[static_cast<std::size_t>(f)] = entry(static_cast<std::size_t>(f));
    } else {
        for (std::ptrdiff_t f = 0; f < total; ++f)
            t.values()[static_cast<std::size_t>(f)] = entry(static_cast<std::size_t>(f));
    }
}

template <typename StateT>
CorrelationTensor correlation_impl(const StateT& state, const std::vector<int>& subset,
                                   const TensorOptions& opts) {
    state.reg().check_subset(subset);
    check_subset_size(subset, opts);
    CorrelationTensor t(subset, subset_extents(state.reg(), subset));

    if (subset.size() == 1) return t;  // <g - <g>> = 0 identically

    const auto means = site_means(state, subset);

    // Shifted operators g_i(a) - lambda_i(a) I per (position, generator).
    std::vector<std::vector<Eigen::MatrixXcd>> shifted(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
        const int d = state.reg().dim(subset[k]);
        const auto& basis = generator_basis(d);
        shifted[k].reserve(static_cast<std::size_t>(d * d - 1));
        for (int g = 1; g <= d * d - 1; ++g)
            shifted[k].push_back(basis.generator(g) -
                                 means[k][static_cast<std::size_t>(g - 1)] *
                                     Eigen::MatrixXcd::Identity(d, d));
    }

    const std::size_t m = subset.size();
    fill_entries(t, opts.exec, [&](std::size_t flat) {
        std::vector<int> idx(m);
        t.unflatten(flat, idx);
        std::vector<SiteMatrix> ops;
        ops.reserve(m);
        for (std::size_t k = 0; k < m; ++k)
            ops.push_back({subset[k], shifted[k][static_cast<std::size_t>(idx[k])]});
        return matrix_expectation(state, ops);
    });
    return t;
}

template <typename StateT>
CorrelationTensor correlation_expanded_impl(const StateT& state, const std::vector<int>& subset,
                                            const TensorOptions& opts) {
    state.reg().check_subset(subset);
    check_subset_size(subset, opts);
    CorrelationTensor t(subset, subset_extents(state.reg(), subset));
    if (subset.size() == 1) return t;

    const auto means = site_means(state, subset);
    const std::size_t m = subset.size();

    // Raw product expectations <prod_{a in T} g(a)> for every sub-subset T,
    // stored as dense tensors over T's generator indices.
    const std::size_t subsets = std::size_t{1} << m;
    std::vector<CorrelationTensor> raw;
    raw.reserve(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> tsites, textents;
        for (std::size_t k = 0; k < m; ++k)
            if (mask >> k & 1) {
                tsites.push_back(subset[k]);
                const int d = state.reg().dim(subset[k]);
                textents.push_back(d * d - 1);
            }
        CorrelationTensor rt(tsites, textents);
        if (tsites.empty()) {
            rt.values()[0] = 1.0;
        } else {
            fill_entries(rt, opts.exec, [&](std::size_t flat) {
                std::vector<int> idx(tsites.size());
                rt.unflatten(flat, idx);
                std::vector<SiteGenerator> ops;
                for (std::size_t k = 0; k < tsites.size(); ++k)
                    ops.push_back({tsites[k], idx[k] + 1});
                return expectation(state, ops);
            });
        }
        raw.push_back(std::move(rt));
    }

    // M_idx = sum_{T subset of S} <prod_T g> * prod_{a not in T} (-lambda_a).
    fill_entries(t, opts.exec, [&](std::size_t flat) {
        std::vector<int> idx(m);
        t.unflatten(flat, idx);
        double acc = 0.0;
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> sub_idx;
            double lambda_prod = 1.0;
            for (std::size_t k = 0; k < m; ++k) {
                if (mask >> k & 1)
                    sub_idx.push_back(idx[k]);
                else
                    lambda_prod *= -means[k][static_cast<std::size_t>(idx[k])];
            }
            acc += raw[mask].at(std::span<const int>(sub_idx)) * lambda_prod;
        }
        return acc;
    });
    return t;
}

template <typename StateT>
CorrelationTensor connected_rec(const StateT& state, const std::vector<int>& subset,
                                const TensorOptions& opts,
                                std::map<std::vector<int>, CorrelationTensor>& memo) {
    if (auto it = memo.find(subset); it != memo.end()) return it->second;

    CorrelationTensor t = correlation_impl(state, subset, opts);
    const std::size_t m = subset.size();
    if (m >= 4) {
        // Position of each site within the subset, to slice entry indices.
        std::map<int, std::size_t> pos;
        for (std::size_t k = 0; k < m; ++k) pos[subset[k]] = k;

        for (const Partition& partition : enumerate_partitions_min2(subset)) {
            std::vector<const CorrelationTensor*> block_tensors;
            std::vector<std::vector<std::size_t>> block_pos;
            for (const auto& block : partition.blocks) {
                // Keep the block's sites in subset order so indices line up.
                std::vector<int> block_sites = block;
                std::sort(block_sites.begin(), block_sites.end(),
                          [&](int a, int b) { return pos[a] < pos[b]; });
                memo.emplace(block_sites, connected_rec(state, block_sites, opts, memo));
                block_tensors.push_back(&memo.at(block_sites));
                std::vector<std::size_t> positions;
                for (int s : block_sites) positions.push_back(pos[s]);
                block_pos.push_back(std::move(positions));
            }
            const auto total = static_cast<std::ptrdiff_t>(t.size());
            std::vector<int> idx(m), bidx(m);
            for (std::ptrdiff_t f = 0; f < total; ++f) {
                t.unflatten(static_cast<std::size_t>(f), idx);
                double prod = 1.0;
                for (std::size_t b = 0; b < block_tensors.size(); ++b) {
                    const auto& positions = block_pos[b];
                    for (std::size_t k = 0; k < positions.size(); ++k)
                        bidx[k] = idx[positions[k]];
                    prod *= block_tensors[b]->at(
                        std::span<const int>(bidx.data(), positions.size()));
                }
                t.values()[static_cast<std::size_t>(f)] -= prod;
            }
        }
    }
    return t;
}

template <typename StateT>
CorrelationTensor connected_impl(const StateT& state, const std::vector<int>& subset,
                                 const TensorOptions& opts) {
    state.reg().check_subset(subset);
    if (subset.size() < 2) throw ShapeError("connected tensor needs at least 2 sites");
    check_subset_size(subset, opts);
    std::map<std::vector<int>, CorrelationTensor> memo;  // confined to this evaluation
    return connected_rec(state, subset, opts, memo);
}

}  // namespace

CorrelationTensor correlation_tensor(const PureState& s, const std::vector<int>& subset,
                                     const TensorOptions& opts) {
    return correlation_impl(s, subset, opts);
}
CorrelationTensor correlation_tensor(const DensityMatrix& rho, const std::vector<int>& subset,
                                     const TensorOptions& opts) {
    return correlation_impl(rho, subset, opts);
}

CorrelationTensor correlation_tensor_expanded(const PureState& s, const std::vector<int>& subset,
                                              const TensorOptions& opts) {
    return correlation_expanded_impl(s, subset, opts);
}
CorrelationTensor correlation_tensor_expanded(const DensityMatrix& rho,
                                              const std::vector<int>& subset,
                                              const TensorOptions& opts) {
    return correlation_expanded_impl(rho, subset, opts);
}

CorrelationTensor connected_tensor(const PureState& s, const std::vector<int>& subset,
                                   const TensorOptions& opts) {
    return connected_impl(s, subset, opts);
}
CorrelationTensor connected_tensor(const DensityMatrix& rho, const std::vector<int>& subset,
                                   const TensorOptions& opts) {
    return connected_impl(rho, subset, opts);
}

double raw_sum(const PureState& s, const std::vector<int>& subset, const TensorOptions& opts) {
    return connected_tensor(s, subset, opts).sum_of_squares();
}
double raw_sum(const DensityMatrix& rho, const std::vector<int>& subset,
               const TensorOptions& opts) {
    return connected_tensor(rho, subset, opts).sum_of_squares();
}

}  // namespace qent
