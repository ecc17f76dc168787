#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qent {

/// The d^2 - 1 traceless Hermitian generators of SU(d), normalized so that
/// tr(g_a g_b) = 2 delta_ab for every d. Ordering: symmetric off-diagonal
/// pairs, antisymmetric pairs, then diagonal, so d = 2 is exactly
/// (sigma_x, sigma_y, sigma_z).
struct GeneratorBasis {
    int dimension;
    std::vector<Eigen::MatrixXcd> generators;

    int count() const { return static_cast<int>(generators.size()); }
    /// 1-based generator index, matching site-operator labels.
    const Eigen::MatrixXcd& generator(int index) const { return generators.at(static_cast<std::size_t>(index - 1)); }
};

/// Cached per dimension; safe for concurrent use. Throws ShapeError for d < 2.
const GeneratorBasis& generator_basis(int d);

}  // namespace qent
