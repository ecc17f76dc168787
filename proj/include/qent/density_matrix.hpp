#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qent/pure_state.hpp"
#include "qent/register.hpp"

namespace qent {

/// Hermitian unit-trace operator over a qudit register.
///
/// Construction validates: Hermitian within 1e-10 elementwise, trace 1 within
/// 1e-10, smallest eigenvalue >= -1e-9.
class DensityMatrix {
public:
    DensityMatrix(QuditRegister reg, Eigen::MatrixXcd entries);

    const QuditRegister& reg() const { return reg_; }
    const Eigen::MatrixXcd& entries() const { return mat_; }
    std::size_t dimension() const { return reg_.total_dimension(); }

    /// Re-checks all type invariants; throws NumericError on violation.
    void validate() const;

private:
    QuditRegister reg_;
    Eigen::MatrixXcd mat_;
};

/// Rank-1 projector |s><s|.
DensityMatrix to_density(const PureState& s);

/// Reduced density matrix on `keep` (distinct, nonempty), kept sites in their
/// original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// JSON wire format: { "dims": [int,...], "entries": [[re, im],...] } row-major.
DensityMatrix density_from_json(const std::string& text);
std::string density_to_json(const DensityMatrix& rho);

}  // namespace qent
