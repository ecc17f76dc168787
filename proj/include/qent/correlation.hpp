#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qent/density_matrix.hpp"
#include "qent/pure_state.hpp"

namespace qent {

enum class Execution { serial, parallel };

struct TensorOptions {
    /// Dense tensors grow as prod (d^2 - 1); refuse subsets above this size
    /// unless raised explicitly.
    int max_subset_sites = 8;
    Execution exec = Execution::parallel;
};

/// Dense real tensor over generator indices of a site subset; shape
/// (d_a^2 - 1) per site, index order matching the subset order.
class CorrelationTensor {
public:
    CorrelationTensor(std::vector<int> sites, std::vector<int> extents);

    const std::vector<int>& sites() const { return sites_; }
    const std::vector<int>& extents() const { return extents_; }
    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    double at(std::span<const int> index) const { return values_[flat(index)]; }
    double& at(std::span<const int> index) { return values_[flat(index)]; }
    double at(std::initializer_list<int> index) const { return at(std::span<const int>(index.begin(), index.size())); }

    std::size_t flat(std::span<const int> index) const;
    /// Mixed-radix digits of a flat position, in subset order.
    void unflatten(std::size_t flat_index, std::span<int> index) const;

    double sum_of_squares() const;
    double max_abs() const;

private:
    std::vector<int> sites_;
    std::vector<int> extents_;
    std::vector<double> values_;
};

/// M(S): entry (i, j, ...) = <prod_a (g_i(a) - lambda_i(a))>, evaluated by
/// direct shifted-operator contraction.
CorrelationTensor correlation_tensor(const PureState& s, const std::vector<int>& subset,
                                     const TensorOptions& opts = {});
CorrelationTensor correlation_tensor(const DensityMatrix& rho, const std::vector<int>& subset,
                                     const TensorOptions& opts = {});

/// Same tensor through the inclusion-exclusion expansion over mean factors;
/// kept as an independent route that must agree with the direct one.
CorrelationTensor correlation_tensor_expanded(const PureState& s, const std::vector<int>& subset,
                                              const TensorOptions& opts = {});
CorrelationTensor correlation_tensor_expanded(const DensityMatrix& rho,
                                              const std::vector<int>& subset,
                                              const TensorOptions& opts = {});

/// Connected (cumulant) tensor M'(S) = M(S) - sum over partitions into blocks
/// of size >= 2 of the product of the blocks' connected tensors.
CorrelationTensor connected_tensor(const PureState& s, const std::vector<int>& subset,
                                   const TensorOptions& opts = {});
CorrelationTensor connected_tensor(const DensityMatrix& rho, const std::vector<int>& subset,
                                   const TensorOptions& opts = {});

/// Sum of squared entries of the connected tensor.
double raw_sum(const PureState& s, const std::vector<int>& subset, const TensorOptions& opts = {});
double raw_sum(const DensityMatrix& rho, const std::vector<int>& subset,
               const TensorOptions& opts = {});

}  // namespace qent
