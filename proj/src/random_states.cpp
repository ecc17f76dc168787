#include "qent/random_states.hpp"

#include <cmath>

namespace qent {

Eigen::VectorXcd StateSampler::gaussian_vector(Eigen::Index n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double re = gauss(rng_);
        const double im = gauss(rng_);
        v(k) = std::complex<double>(re, im);
    }
    return v;
}

PureState StateSampler::haar_state(const QuditRegister& reg) {
    return PureState(reg, gaussian_vector(static_cast<Eigen::Index>(reg.total_dimension())));
}

PureState StateSampler::product_state(const QuditRegister& reg) {
    PureState acc = PureState(QuditRegister({reg.dim(1)}), gaussian_vector(reg.dim(1)));
    for (int s = 2; s <= reg.sites(); ++s)
        acc = tensor_product(acc, PureState(QuditRegister({reg.dim(s)}), gaussian_vector(reg.dim(s))));
    return acc;
}

Eigen::MatrixXcd StateSampler::haar_unitary(int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd g(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) {
            const double re = gauss(rng_);
            const double im = gauss(rng_);
            g(r, c) = std::complex<double>(re, im);
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < d; ++c) {  // fix phases so the sampling is Haar
        const std::complex<double> diag = r(c, c);
        const double mag = std::abs(diag);
        q.col(c) *= mag > 0 ? diag / mag : 1.0;
    }
    return q;
}

int StateSampler::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng_);
}

}  // namespace qent
