#pragma once

#include <vector>

#include "qent/density_matrix.hpp"
#include "qent/pure_state.hpp"

namespace qent {

/// One generator acting on one site (identity everywhere else). Generator
/// indices are 1-based: 1..d^2-1.
struct SiteGenerator {
    int site;
    int generator;
};

/// <tensor_a g_{i_a}(a)> with identity on unlisted sites, contracted
/// site-by-site (the full-space operator is never materialized). The value
/// must be real; an imaginary part above 1e-10 raises NumericError.
double expectation(const PureState& s, const std::vector<SiteGenerator>& ops);
double expectation(const DensityMatrix& rho, const std::vector<SiteGenerator>& ops);

/// Single-site mean <g_i(site)>.
double local_mean(const PureState& s, int site, int generator);
double local_mean(const DensityMatrix& rho, int site, int generator);

/// Building block shared with the correlation kernels: expectation of a
/// product of arbitrary per-site matrices (each d_site x d_site, non-owning).
struct SiteMatrix {
    int site;
    Eigen::Ref<const Eigen::MatrixXcd> matrix;
};
double matrix_expectation(const PureState& s, const std::vector<SiteMatrix>& ops);
double matrix_expectation(const DensityMatrix& rho, const std::vector<SiteMatrix>& ops);

}  // namespace qent
