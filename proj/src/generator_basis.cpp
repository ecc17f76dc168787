#include "qent/generator_basis.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "qent/errors.hpp"

namespace qent {

namespace {

GeneratorBasis build(int d) {
    GeneratorBasis basis;
    basis.dimension = d;
    basis.generators.reserve(static_cast<std::size_t>(d) * d - 1);
    const std::complex<double> i(0.0, 1.0);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
            g(j, k) = 1.0;
            g(k, j) = 1.0;
            basis.generators.push_back(std::move(g));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
            g(j, k) = -i;
            g(k, j) = i;
            basis.generators.push_back(std::move(g));
        }
    for (int l = 1; l < d; ++l) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d, d);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) g(j, j) = scale;
        g(l, l) = -scale * l;
        basis.generators.push_back(std::move(g));
    }
    return basis;
}

}  // namespace

const GeneratorBasis& generator_basis(int d) {
    if (d < 2) throw ShapeError("generator basis needs dimension >= 2");
    static std::mutex mutex;
    static std::map<int, GeneratorBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, build(d)).first;
    return it->second;
}

}  // namespace qent
