#include "qent/expectation.hpp"

#include <cmath>
#include <complex>

#include "qent/errors.hpp"
#include "qent/generator_basis.hpp"

namespace qent {

namespace {

void check_sites(const QuditRegister& reg, const std::vector<SiteMatrix>& ops) {
    std::vector<int> sites;
    sites.reserve(ops.size());
    for (const auto& op : ops) sites.push_back(op.site);
    reg.check_subset(sites);
    for (const auto& op : ops) {
        const int d = reg.dim(op.site);
        if (op.matrix.rows() != d || op.matrix.cols() != d)
            throw ShapeError("operator shape does not match site " + std::to_string(op.site));
    }
}

// out = (A acting on `site`) * in, both over the full register.
void apply_site(const QuditRegister& reg, int site, const Eigen::Ref<const Eigen::MatrixXcd>& a,
                const Eigen::VectorXcd& in, Eigen::VectorXcd& out) {
    const int d = reg.dim(site);
    const std::size_t stride = reg.stride(site);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    const std::size_t total = reg.total_dimension();
    for (std::size_t base = 0; base < total; base += block)
        for (std::size_t off = 0; off < stride; ++off) {
            const std::size_t cell = base + off;
            for (int r = 0; r < d; ++r) {
                std::complex<double> acc = 0.0;
                for (int c = 0; c < d; ++c)
                    acc += a(r, c) *
                           in(static_cast<Eigen::Index>(cell + static_cast<std::size_t>(c) * stride));
                out(static_cast<Eigen::Index>(cell + static_cast<std::size_t>(r) * stride)) = acc;
            }
        }
}

double real_or_throw(std::complex<double> v) {
    if (std::abs(v.imag()) >= 1e-10)
        throw NumericError("expectation value has a non-negligible imaginary part " +
                           std::to_string(v.imag()));
    return v.real();
}

// Per-thread scratch keeps the hot path (tensor entries, roof objective)
// allocation-free; concurrent calls each see their own buffers.
struct Scratch {
    Eigen::VectorXcd a, b;
};
Scratch& scratch_for(Eigen::Index size) {
    thread_local Scratch s;
    if (s.a.size() < size) {
        s.a.resize(size);
        s.b.resize(size);
    }
    return s;
}

}  // namespace

double matrix_expectation(const PureState& s, const std::vector<SiteMatrix>& ops) {
    check_sites(s.reg(), ops);
    const Eigen::Index dim = s.amplitudes().size();
    Scratch& ws = scratch_for(dim);
    ws.a.head(dim) = s.amplitudes();
    for (const auto& op : ops) {
        apply_site(s.reg(), op.site, op.matrix, ws.a, ws.b);
        std::swap(ws.a, ws.b);
    }
    return real_or_throw(s.amplitudes().dot(ws.a.head(dim)));
}

double matrix_expectation(const DensityMatrix& rho, const std::vector<SiteMatrix>& ops) {
    check_sites(rho.reg(), ops);
    // tr(O rho): apply the product of site operators to each column of rho and
    // accumulate the diagonal.
    const auto dim = static_cast<Eigen::Index>(rho.dimension());
    Scratch& ws = scratch_for(dim);
    std::complex<double> trace = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c) {
        ws.a.head(dim) = rho.entries().col(c);
        for (const auto& op : ops) {
            apply_site(rho.reg(), op.site, op.matrix, ws.a, ws.b);
            std::swap(ws.a, ws.b);
        }
        trace += ws.a(c);
    }
    return real_or_throw(trace);
}

namespace {

template <typename StateT>
double expectation_impl(const StateT& state, const std::vector<SiteGenerator>& ops) {
    std::vector<SiteMatrix> mats;
    mats.reserve(ops.size());
    for (const auto& op : ops) {
        const int d = state.reg().dim(op.site);
        if (op.generator < 1 || op.generator > d * d - 1)
            throw ShapeError("generator index " + std::to_string(op.generator) +
                             " out of range for site " + std::to_string(op.site) +
                             " of dimension " + std::to_string(d));
        mats.push_back({op.site, generator_basis(d).generator(op.generator)});
    }
    return matrix_expectation(state, mats);
}

}  // namespace

double expectation(const PureState& s, const std::vector<SiteGenerator>& ops) {
    return expectation_impl(s, ops);
}
double expectation(const DensityMatrix& rho, const std::vector<SiteGenerator>& ops) {
    return expectation_impl(rho, ops);
}

double local_mean(const PureState& s, int site, int generator) {
    return expectation(s, {{site, generator}});
}
double local_mean(const DensityMatrix& rho, int site, int generator) {
    return expectation(rho, {{site, generator}});
}

}  // namespace qent
