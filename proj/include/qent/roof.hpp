#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qent/correlation.hpp"
#include "qent/density_matrix.hpp"
#include "qent/pure_state.hpp"

namespace qent {

/// Weighted pure-state ensemble reconstructing a target density matrix.
struct EnsembleDecomposition {
    std::vector<double> weights;
    std::vector<PureState> states;

    std::size_t size() const { return weights.size(); }
    /// Sum_i p_i |psi_i><psi_i| for reconstruction checks.
    Eigen::MatrixXcd reconstruct() const;
};

/// Every decomposition of rho arises from an isometry V (k x r, V^dag V = I)
/// acting on the eigendecomposition: |psi~_i> = sum_j V_ij sqrt(l_j) |e_j>.
/// Members with weight below 1e-12 are dropped.
EnsembleDecomposition ensemble_from_parameters(const DensityMatrix& rho,
                                               const Eigen::MatrixXcd& mixing);

struct RoofBudget {
    int restarts = 32;
    int max_iterations = 160;  // coordinate sweeps per restart
    int k_max = 0;             // ensemble size cap; 0 = rank^2
    std::uint64_t seed = 1;
    Execution exec = Execution::parallel;
};

struct RoofResult {
    double value = 0.0;  // best ensemble average found: an upper bound on the roof
    EnsembleDecomposition ensemble;
    double eigen_ensemble_value = 0.0;  // objective at the eigendecomposition
    int restarts = 0;
    long long iterations = 0;  // objective evaluations across restarts
    bool converged = false;    // best restart stopped on tolerance, not budget
    double restart_spread = 0.0;
};

/// Convex-roof extension: minimize sum_i p_i B(psi_i) over decompositions of
/// rho, by multi-restart derivative-free descent over the isometry manifold.
/// The result is an upper bound on the true roof and never exceeds the
/// eigendecomposition value. Fixed seeds give bit-identical results.
RoofResult roof_B(const DensityMatrix& rho, const std::vector<int>& subset,
                  const RoofBudget& budget = {},
                  std::optional<double> normalization = std::nullopt);

/// Closed-form direct (non-roof) evaluation on the Werner state:
/// (4F - 1)^2 / 9. Matches measure_B on werner(F).
double werner_direct_B(double fidelity);

}  // namespace qent
