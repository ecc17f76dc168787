#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qent/register.hpp"

namespace qent {

/// Normalized complex amplitude vector over a qudit register, stored dense and
/// row-major with site 1 as the most significant digit.
class PureState {
public:
    /// Normalizes the amplitudes; rejects the zero vector (NumericError).
    PureState(QuditRegister reg, Eigen::VectorXcd amplitudes);

    const QuditRegister& reg() const { return reg_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::size_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
    std::size_t dimension() const { return reg_.total_dimension(); }

private:
    QuditRegister reg_;
    Eigen::VectorXcd amps_;
};

/// |digits> computational basis state.
PureState basis_state(const QuditRegister& reg, const std::vector<int>& digits);

/// a ⊗ b: registers concatenate, amplitudes Kronecker (a's sites first).
PureState tensor_product(const PureState& a, const PureState& b);

/// Relabel sites: new site k holds what old site perm[k-1] held. `perm` must
/// be a permutation of 1..n.
PureState permute_sites(const PureState& s, const std::vector<int>& perm);

/// Apply a d x d unitary (or any matrix) on one site.
PureState apply_site_matrix(const PureState& s, int site, const Eigen::MatrixXcd& u);

/// Textual form parseable by parse_ket_expression, e.g. "0.5|00> - 0.5i|11>".
std::string render(const PureState& s);

}  // namespace qent
