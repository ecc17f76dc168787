#pragma once

#include <array>
#include <vector>

#include "qent/density_matrix.hpp"

namespace qent {

struct ConcurrenceResult {
    double value;                  // max(0, r1 - r2 - r3 - r4)
    std::array<double, 4> roots;   // descending
};

/// Wootters concurrence of a two-qubit density matrix: square roots of the
/// eigenvalues of rho (sy x sy) rho* (sy x sy), conjugation taken in the
/// computational basis.
ConcurrenceResult concurrence(const DensityMatrix& rho);

/// Smallest eigenvalue of the partial transpose over `transpose_sites`. A
/// negative value certifies entanglement across the cut (decisive for 2x2 and
/// 2x3 systems).
double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<int>& transpose_sites);

}  // namespace qent
