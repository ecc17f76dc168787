#include "qent/pure_state.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "qent/errors.hpp"

namespace qent {

PureState::PureState(QuditRegister reg, Eigen::VectorXcd amplitudes)
    : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.size()) != reg_.total_dimension())
        throw ShapeError("amplitude vector length " + std::to_string(amps_.size()) +
                         " does not match register dimension " +
                         std::to_string(reg_.total_dimension()));
    const double n = amps_.norm();
    if (!(n > 1e-150)) throw NumericError("cannot normalize the zero state vector");
    if (std::abs(n - 1.0) > 1e-15) amps_ /= n;
}

PureState basis_state(const QuditRegister& reg, const std::vector<int>& digits) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.total_dimension()));
    v(static_cast<Eigen::Index>(reg.index_of(digits))) = 1.0;
    return PureState(reg, std::move(v));
}

PureState tensor_product(const PureState& a, const PureState& b) {
    std::vector<int> dims = a.reg().dims();
    dims.insert(dims.end(), b.reg().dims().begin(), b.reg().dims().end());
    QuditRegister reg(std::move(dims));  // rejects dimension overflow
    const Eigen::Index da = a.amplitudes().size();
    const Eigen::Index db = b.amplitudes().size();
    Eigen::VectorXcd v(da * db);
    for (Eigen::Index i = 0; i < da; ++i) v.segment(i * db, db) = a.amplitude(i) * b.amplitudes();
    return PureState(std::move(reg), std::move(v));
}

PureState permute_sites(const PureState& s, const std::vector<int>& perm) {
    const int n = s.reg().sites();
    if (static_cast<int>(perm.size()) != n) throw ShapeError("permutation length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)])
            throw ShapeError("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(p - 1)] = true;
    }
    std::vector<int> dims(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) dims[static_cast<std::size_t>(k)] = s.reg().dim(perm[static_cast<std::size_t>(k)]);
    QuditRegister reg(dims);
    Eigen::VectorXcd v(s.amplitudes().size());
    std::vector<int> src(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < s.dimension(); ++idx) {
        const std::vector<int> digits = reg.digits_of(idx);
        for (int k = 0; k < n; ++k)
            src[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)] - 1)] = digits[static_cast<std::size_t>(k)];
        v(static_cast<Eigen::Index>(idx)) = s.amplitude(s.reg().index_of(src));
    }
    return PureState(std::move(reg), std::move(v));
}

PureState apply_site_matrix(const PureState& s, int site, const Eigen::MatrixXcd& u) {
    const int d = s.reg().dim(site);
    if (u.rows() != d || u.cols() != d)
        throw ShapeError("matrix shape does not match site dimension");
    const std::size_t stride = s.reg().stride(site);
    const std::size_t block = stride * static_cast<std::size_t>(d);
    const std::size_t total = s.dimension();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(total));
    for (std::size_t base = 0; base < total; base += block)
        for (std::size_t off = 0; off < stride; ++off)
            for (int a = 0; a < d; ++a) {
                std::complex<double> acc = 0.0;
                for (int b = 0; b < d; ++b)
                    acc += u(a, b) * s.amplitude(base + static_cast<std::size_t>(b) * stride + off);
                out(static_cast<Eigen::Index>(base + static_cast<std::size_t>(a) * stride + off)) = acc;
            }
    return PureState(s.reg(), std::move(out));
}

namespace {

std::string format_coeff(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17f", x);
    std::string str(buf);
    while (str.size() > 1 && str.back() == '0') str.pop_back();
    if (!str.empty() && str.back() == '.') str.pop_back();
    return str;
}

}  // namespace

std::string render(const PureState& s) {
    for (int d : s.reg().dims())
        if (d > 10) throw ShapeError("ket literals support site dimensions up to 10");
    std::string out;
    auto emit = [&](double coeff, bool imaginary, const std::string& ket) {
        if (std::abs(coeff) < 1e-15) return;
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += format_coeff(std::abs(coeff));
        if (imaginary) out += "i";
        out += ket;
    };
    for (std::size_t idx = 0; idx < s.dimension(); ++idx) {
        const std::complex<double> a = s.amplitude(idx);
        std::string ket = "|";
        for (int dgt : s.reg().digits_of(idx)) ket += static_cast<char>('0' + dgt);
        ket += ">";
        emit(a.real(), false, ket);
        emit(a.imag(), true, ket);
    }
    return out;
}

}  // namespace qent
