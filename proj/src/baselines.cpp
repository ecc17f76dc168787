#include "qent/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "qent/errors.hpp"

namespace qent {

ConcurrenceResult concurrence(const DensityMatrix& rho) {
    if (rho.reg().dims() != std::vector<int>{2, 2})
        throw ShapeError("concurrence is defined for a [2,2] register");

    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();  // sigma_y x sigma_y
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    // The roots are the singular values of sqrt(rho) flip conj(sqrt(rho)):
    // sqrt(rho) flip rho* flip sqrt(rho) = X X^dag for that X, so this avoids
    // square roots of near-zero eigenvalues and keeps absolute accuracy.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
    if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
    const Eigen::VectorXd clamped = es.eigenvalues().cwiseMax(0.0);
    const Eigen::MatrixXcd sqrt_rho = es.eigenvectors() *
                                      clamped.cwiseSqrt().asDiagonal() *
                                      es.eigenvectors().adjoint();
    const Eigen::MatrixXcd x = sqrt_rho * flip * sqrt_rho.conjugate();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x);

    ConcurrenceResult out{};
    for (int j = 0; j < 4; ++j)
        out.roots[static_cast<std::size_t>(j)] = svd.singularValues()(j);  // descending
    out.value = std::max(0.0, out.roots[0] - out.roots[1] - out.roots[2] - out.roots[3]);
    return out;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<int>& transpose_sites) {
    rho.reg().check_subset(transpose_sites);
    std::vector<int> ts = transpose_sites;
    std::sort(ts.begin(), ts.end());

    const auto dim = static_cast<Eigen::Index>(rho.dimension());
    Eigen::MatrixXcd pt(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        std::vector<int> rd = rho.reg().digits_of(static_cast<std::size_t>(r));
        for (Eigen::Index c = 0; c < dim; ++c) {
            std::vector<int> cd = rho.reg().digits_of(static_cast<std::size_t>(c));
            for (int s : ts) std::swap(rd[static_cast<std::size_t>(s - 1)], cd[static_cast<std::size_t>(s - 1)]);
            pt(static_cast<Eigen::Index>(rho.reg().index_of(rd)),
               static_cast<Eigen::Index>(rho.reg().index_of(cd))) = rho.entries()(r, c);
            for (int s : ts) std::swap(rd[static_cast<std::size_t>(s - 1)], cd[static_cast<std::size_t>(s - 1)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("eigendecomposition failed");
    return es.eigenvalues().minCoeff();
}

}  // namespace qent
