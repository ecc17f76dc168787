#include "qent/roof.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qent/errors.hpp"
#include "qent/generator_basis.hpp"
#include "qent/measure.hpp"

namespace qent {

Eigen::MatrixXcd EnsembleDecomposition::reconstruct() const {
    if (states.empty()) return Eigen::MatrixXcd();
    const Eigen::Index dim = states.front().amplitudes().size();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t i = 0; i < states.size(); ++i)
        acc += weights[i] * (states[i].amplitudes() * states[i].amplitudes().adjoint());
    return acc;
}

namespace {

constexpr double kWeightFloor = 1e-12;

struct EigenSystem {
    Eigen::VectorXd values;   // descending, truncated to rank
    Eigen::MatrixXcd vectors;  // matching columns
    int rank;
};

EigenSystem eigensystem(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
    if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
    const Eigen::Index dim = es.eigenvalues().size();
    EigenSystem sys;
    sys.values.resize(dim);
    sys.vectors.resize(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {  // Eigen sorts ascending; flip
        sys.values(j) = es.eigenvalues()(dim - 1 - j);
        sys.vectors.col(j) = es.eigenvectors().col(dim - 1 - j);
    }
    sys.rank = 0;
    const double tol = std::max(1e-12, 1e-14 * sys.values(0));
    while (sys.rank < dim && sys.values(sys.rank) > tol) ++sys.rank;
    return sys;
}

EnsembleDecomposition ensemble_from_mixing(const QuditRegister& reg, const EigenSystem& sys,
                                           const Eigen::MatrixXcd& mixing) {
    const int r = sys.rank;
    const auto k = mixing.rows();
    if (mixing.cols() != r)
        throw ShapeError("mixing matrix must have rank(rho) = " + std::to_string(r) + " columns");
    if (k < r) throw ShapeError("mixing matrix needs at least rank(rho) rows");
    const double iso_err =
        (mixing.adjoint() * mixing - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
    if (iso_err > 1e-10)
        throw ShapeError("mixing matrix is not an isometry (deviation " + std::to_string(iso_err) +
                         ")");

    EnsembleDecomposition ens;
    Eigen::VectorXcd psi(sys.vectors.rows());
    for (Eigen::Index i = 0; i < k; ++i) {
        psi.setZero();
        for (int j = 0; j < r; ++j)
            psi += mixing(i, j) * std::sqrt(sys.values(j)) * sys.vectors.col(j);
        const double p = psi.squaredNorm();
        if (p < kWeightFloor) continue;
        ens.weights.push_back(p);
        ens.states.emplace_back(reg, psi / std::sqrt(p));
    }
    return ens;
}

// splitmix64: deterministic per-restart seed derivation.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4568bULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Objective state for one restart: theta parametrizes U = exp(i H) in SU(k),
/// V = first r columns of U, f(theta) = sum_i p_i B(psi_i).
class RoofObjective {
public:
    RoofObjective(const DensityMatrix& rho, const EigenSystem& sys, int k,
                  const std::vector<int>& subset, double normalization)
        : reg_(rho.reg()),
          sys_(sys),
          k_(k),
          subset_(subset),
          normalization_(normalization),
          basis_(generator_basis(k)) {
        opts_.exec = Execution::serial;
        opts_.max_subset_sites = std::max(opts_.max_subset_sites, static_cast<int>(subset.size()));
    }

    int parameter_count() const { return k_ * k_ - 1; }

    // U = exp(i sum_a theta_a g_a) through the eigendecomposition of the
    // Hermitian exponent.
    Eigen::MatrixXcd unitary(const Eigen::VectorXd& theta) const {
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(k_, k_);
        for (int a = 0; a < parameter_count(); ++a)
            if (theta(a) != 0.0) h += theta(a) * basis_.generator(a + 1);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        if (es.info() != Eigen::Success) throw NumericError("matrix exponential failed");
        Eigen::VectorXcd phases(k_);
        for (int j = 0; j < k_; ++j)
            phases(j) = std::exp(std::complex<double>(0.0, es.eigenvalues()(j)));
        return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    }

    double operator()(const Eigen::VectorXd& theta, long long& evals) const {
        ++evals;
        const Eigen::MatrixXcd v = unitary(theta).leftCols(sys_.rank);
        double acc = 0.0;
        Eigen::VectorXcd psi(sys_.vectors.rows());
        for (int row = 0; row < k_; ++row) {
            psi.setZero();
            for (int j = 0; j < sys_.rank; ++j)
                psi += v(row, j) * std::sqrt(sys_.values(j)) * sys_.vectors.col(j);
            const double p = psi.squaredNorm();
            if (p < kWeightFloor) continue;
            const PureState member(reg_, psi / std::sqrt(p));
            acc += p * measure_B(member, subset_, normalization_, opts_).value;
        }
        return acc;
    }

    EnsembleDecomposition ensemble(const Eigen::VectorXd& theta) const {
        return ensemble_from_mixing(reg_, sys_, unitary(theta).leftCols(sys_.rank));
    }

private:
    QuditRegister reg_;
    const EigenSystem& sys_;
    int k_;
    std::vector<int> subset_;
    double normalization_;
    const GeneratorBasis& basis_;
    TensorOptions opts_;
};

struct RestartOutcome {
    double value = 0.0;
    Eigen::VectorXd theta;
    long long evals = 0;
    bool converged = false;
    bool failed = false;
};

// Coordinate-wise pattern search with shrinking step; the objective is not
// smooth where member weights vanish, so stay derivative-free.
RestartOutcome run_restart(const RoofObjective& objective, int restart_index,
                           const RoofBudget& budget) {
    RestartOutcome out;
    const int params = objective.parameter_count();
    out.theta = Eigen::VectorXd::Zero(params);
    if (restart_index > 0) {
        std::mt19937_64 rng(split_seed(budget.seed, static_cast<std::uint64_t>(restart_index)));
        std::uniform_real_distribution<double> dist(-1.5, 1.5);
        for (int a = 0; a < params; ++a) out.theta(a) = dist(rng);
    }

    double best = objective(out.theta, out.evals);
    double step = 0.5;
    Eigen::VectorXd trial = out.theta;
    for (int sweep = 0; sweep < budget.max_iterations; ++sweep) {
        if (best < 1e-13) {  // the measure is nonnegative; nothing left to gain
            out.converged = true;
            break;
        }
        double sweep_gain = 0.0;
        for (int a = 0; a < params; ++a) {
            for (const double delta : {step, -step}) {
                trial = out.theta;
                trial(a) += delta;
                const double f = objective(trial, out.evals);
                if (f < best - 1e-15) {
                    sweep_gain += best - f;
                    best = f;
                    out.theta = trial;
                    break;
                }
            }
        }
        if (sweep_gain < 1e-10) {
            step *= 0.5;
            if (step < 1e-5) {
                out.converged = true;
                break;
            }
        }
    }
    out.value = best;
    return out;
}

}  // namespace

EnsembleDecomposition ensemble_from_parameters(const DensityMatrix& rho,
                                               const Eigen::MatrixXcd& mixing) {
    return ensemble_from_mixing(rho.reg(), eigensystem(rho), mixing);
}

RoofResult roof_B(const DensityMatrix& rho, const std::vector<int>& subset,
                  const RoofBudget& budget, std::optional<double> normalization) {
    rho.reg().check_subset(subset);
    if (budget.restarts < 1 || budget.max_iterations < 1)
        throw ShapeError("roof budget must be positive");

    const EigenSystem sys = eigensystem(rho);
    double norm;
    if (normalization) {
        norm = *normalization;
        if (!(norm > 0.0)) throw ShapeError("normalization must be positive");
    } else {
        for (int s : subset)
            if (rho.reg().dim(s) != rho.reg().dim(subset.front()))
                throw ShapeError("sites of mixed local dimension need an explicit normalization");
        norm = calibrate_normalization(static_cast<int>(subset.size()),
                                       rho.reg().dim(subset.front()));
    }

    RoofResult result;
    if (sys.rank == 1) {
        // Pure state: the only decomposition is the state itself.
        PureState psi(rho.reg(), sys.vectors.col(0));
        const MeasureResult m = measure_B(psi, subset, norm);
        result.value = m.value;
        result.eigen_ensemble_value = m.value;
        result.ensemble.weights = {1.0};
        result.ensemble.states = {std::move(psi)};
        result.restarts = 0;
        result.iterations = 1;
        result.converged = true;
        return result;
    }

    const int auto_cap = sys.rank * sys.rank;
    const int k = std::max(sys.rank, budget.k_max > 0 ? std::min(budget.k_max, auto_cap) : auto_cap);
    const RoofObjective objective(rho, sys, k, subset, norm);

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(budget.restarts));
    if (budget.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < budget.restarts; ++i) {
            try {
                outcomes[static_cast<std::size_t>(i)] = run_restart(objective, i, budget);
            } catch (...) {
                outcomes[static_cast<std::size_t>(i)].failed = true;
            }
        }
    } else {
        for (int i = 0; i < budget.restarts; ++i) {
            try {
                outcomes[static_cast<std::size_t>(i)] = run_restart(objective, i, budget);
            } catch (...) {
                outcomes[static_cast<std::size_t>(i)].failed = true;
            }
        }
    }

    int best_index = -1;
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < budget.restarts; ++i) {
        const auto& o = outcomes[static_cast<std::size_t>(i)];
        if (o.failed) continue;
        result.iterations += o.evals;
        if (best_index < 0) {
            lo = hi = o.value;
        } else {
            lo = std::min(lo, o.value);
            hi = std::max(hi, o.value);
        }
        if (best_index < 0 || o.value < outcomes[static_cast<std::size_t>(best_index)].value)
            best_index = i;
        ++result.restarts;
    }
    if (best_index < 0)
        throw NumericError("roof minimization failed: no restart produced a value");

    const auto& best = outcomes[static_cast<std::size_t>(best_index)];
    result.value = best.value;
    result.converged = best.converged;
    result.restart_spread = hi - lo;
    result.ensemble = objective.ensemble(best.theta);
    {
        long long evals = 0;
        result.eigen_ensemble_value =
            objective(Eigen::VectorXd::Zero(objective.parameter_count()), evals);
    }
    return result;
}

double werner_direct_B(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0))
        throw ShapeError("werner fidelity must lie in [0, 1]");
    const double t = 4.0 * fidelity - 1.0;
    return t * t / 9.0;
}

}  // namespace qent
