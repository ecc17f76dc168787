#include "qent/density_matrix.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "qent/errors.hpp"

namespace qent {

DensityMatrix::DensityMatrix(QuditRegister reg, Eigen::MatrixXcd entries)
    : reg_(std::move(reg)), mat_(std::move(entries)) {
    const auto dim = static_cast<Eigen::Index>(reg_.total_dimension());
    if (mat_.rows() != dim || mat_.cols() != dim)
        throw ShapeError("density matrix side " + std::to_string(mat_.rows()) +
                         " does not match register dimension " + std::to_string(dim));
    validate();
}

void DensityMatrix::validate() const {
    const double herm_err = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_err > 1e-10)
        throw NumericError("density matrix not Hermitian (max deviation " +
                           std::to_string(herm_err) + ")");
    const std::complex<double> tr = mat_.trace();
    if (std::abs(tr - 1.0) > 1e-10)
        throw NumericError("density matrix trace differs from 1 by " +
                           std::to_string(std::abs(tr - 1.0)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("eigenvalue check failed to converge");
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -1e-9)
        throw NumericError("density matrix not positive semidefinite (min eigenvalue " +
                           std::to_string(min_eig) + ")");
}

DensityMatrix to_density(const PureState& s) {
    return DensityMatrix(s.reg(), s.amplitudes() * s.amplitudes().adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    rho.reg().check_subset(keep);
    std::vector<int> kept_sorted = keep;
    std::sort(kept_sorted.begin(), kept_sorted.end());

    const int n = rho.reg().sites();
    std::vector<int> traced;
    for (int s = 1; s <= n; ++s)
        if (!std::binary_search(kept_sorted.begin(), kept_sorted.end(), s)) traced.push_back(s);

    std::vector<int> kept_dims;
    for (int s : kept_sorted) kept_dims.push_back(rho.reg().dim(s));
    QuditRegister out_reg(kept_dims);

    std::size_t traced_total = 1;
    for (int s : traced) traced_total *= static_cast<std::size_t>(rho.reg().dim(s));

    // Map (kept digits, traced digits) -> full flat index.
    auto full_index = [&](const std::vector<int>& kd, const std::vector<int>& td) {
        std::vector<int> digits(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < kept_sorted.size(); ++k)
            digits[static_cast<std::size_t>(kept_sorted[k] - 1)] = kd[k];
        for (std::size_t k = 0; k < traced.size(); ++k)
            digits[static_cast<std::size_t>(traced[k] - 1)] = td[k];
        return rho.reg().index_of(digits);
    };

    const std::size_t out_dim = out_reg.total_dimension();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(out_dim),
                                                  static_cast<Eigen::Index>(out_dim));
    std::vector<int> td;
    for (std::size_t r = 0; r < out_dim; ++r) {
        const std::vector<int> rd = out_reg.digits_of(r);
        for (std::size_t c = 0; c < out_dim; ++c) {
            const std::vector<int> cd = out_reg.digits_of(c);
            std::complex<double> acc = 0.0;
            for (std::size_t t = 0; t < traced_total; ++t) {
                td.assign(traced.size(), 0);
                std::size_t rem = t;
                for (std::size_t k = traced.size(); k-- > 0;) {
                    const auto d = static_cast<std::size_t>(rho.reg().dim(traced[k]));
                    td[k] = static_cast<int>(rem % d);
                    rem /= d;
                }
                acc += rho.entries()(static_cast<Eigen::Index>(full_index(rd, td)),
                                     static_cast<Eigen::Index>(full_index(cd, td)));
            }
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
        }
    }
    return DensityMatrix(std::move(out_reg), std::move(out));
}

DensityMatrix density_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("entries"))
        throw ParseError("density matrix JSON needs \"dims\" and \"entries\"");
    std::vector<int> dims;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer()) throw ParseError("\"dims\" must be integers");
        dims.push_back(d.get<int>());
    }
    QuditRegister reg(dims);
    const auto dim = static_cast<Eigen::Index>(reg.total_dimension());
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
        throw ShapeError("\"entries\" must hold " + std::to_string(dim * dim) + " [re, im] pairs");
    Eigen::MatrixXcd m(dim, dim);
    Eigen::Index k = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each entry must be an [re, im] pair");
        m(k / dim, k % dim) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
        ++k;
    }
    return DensityMatrix(std::move(reg), std::move(m));
}

std::string density_to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["dims"] = rho.reg().dims();
    nlohmann::json entries = nlohmann::json::array();
    const auto dim = static_cast<Eigen::Index>(rho.dimension());
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) {
            const auto v = rho.entries()(r, c);
            entries.push_back({v.real(), v.imag()});
        }
    j["entries"] = std::move(entries);
    return j.dump();
}

}  // namespace qent
