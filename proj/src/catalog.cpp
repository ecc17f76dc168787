#include "qent/catalog.hpp"

#include <cmath>
#include <cstdlib>

#include "qent/errors.hpp"
#include "qent/ket_parser.hpp"

namespace qent {

namespace catalog {

PureState bell() {
    return parse_ket_expression("(|01> - |10>)/sqrt(2)", QuditRegister::qubits(2));
}

PureState ghz(int n) { return ghz_qudit(n, 2); }

PureState ghz_qudit(int m, int d) {
    if (m < 2) throw ShapeError("ghz needs at least 2 sites");
    if (d < 2) throw ShapeError("ghz needs local dimension >= 2");
    QuditRegister reg = QuditRegister::uniform(m, d);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.total_dimension()));
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        const std::vector<int> digits(static_cast<std::size_t>(m), k);
        v(static_cast<Eigen::Index>(reg.index_of(digits))) = a;
    }
    return PureState(std::move(reg), std::move(v));
}

PureState w(int n) {
    if (n < 2) throw ShapeError("w needs at least 2 sites");
    QuditRegister reg = QuditRegister::qubits(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg.total_dimension()));
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) v(static_cast<Eigen::Index>(1) << (n - 1 - k)) = a;
    return PureState(std::move(reg), std::move(v));
}

PureState phi4() {
    return parse_ket_expression("(|0000> + |0011> + |1100> - |1111>)/2",
                                QuditRegister::qubits(4));
}

PureState phi6() {
    return parse_ket_expression(
        "(|0011> + |0101> + |1001> + |1010> + |0110> + |1100>)/sqrt(6)",
        QuditRegister::qubits(4));
}

DensityMatrix werner(double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0))
        throw ShapeError("werner fidelity must lie in [0, 1]");
    const PureState singlet = bell();
    const Eigen::MatrixXcd proj = singlet.amplitudes() * singlet.amplitudes().adjoint();
    const Eigen::MatrixXcd rho =
        fidelity * proj + (1.0 - fidelity) / 3.0 * (Eigen::MatrixXcd::Identity(4, 4) - proj);
    return DensityMatrix(QuditRegister::qubits(2), rho);
}

}  // namespace catalog

namespace {

// "name", "name:arg", "name:arg1,arg2" or "name(args)".
struct SpecParts {
    std::string name;
    std::vector<std::string> args;
};

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

SpecParts split_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const auto paren = spec.find('(');
    if (paren != std::string::npos && (colon == std::string::npos || paren < colon)) {
        if (spec.back() != ')') throw ParseError("expected \")\" at end of state spec", spec.size());
        SpecParts p;
        p.name = spec.substr(0, paren);
        p.args = split_top_level(spec.substr(paren + 1, spec.size() - paren - 2));
        return p;
    }
    if (colon != std::string::npos) {
        SpecParts p;
        p.name = spec.substr(0, colon);
        p.args = split_top_level(spec.substr(colon + 1));
        return p;
    }
    return {spec, {}};
}

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int int_arg(const SpecParts& p, std::size_t k) {
    if (k >= p.args.size())
        throw ParseError("state \"" + p.name + "\" needs an integer parameter");
    try {
        std::size_t used = 0;
        const int v = std::stoi(p.args[k], &used);
        if (used != p.args[k].size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer parameter \"" + p.args[k] + "\"");
    }
}

double real_arg(const SpecParts& p, std::size_t k) {
    if (k >= p.args.size()) throw ParseError("state \"" + p.name + "\" needs a real parameter");
    try {
        std::size_t used = 0;
        const double v = std::stod(p.args[k], &used);
        if (used != p.args[k].size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad real parameter \"" + p.args[k] + "\"");
    }
}

PureState pure_sub_spec(const std::string& raw) {
    const std::string spec = strip(raw);
    if (!spec.empty() && spec.find('|') != std::string::npos) {
        // Ket literal/expression over qubits; digit count fixes the site count.
        const auto bar = spec.find('|');
        std::size_t digits = 0;
        for (std::size_t k = bar + 1; k < spec.size() && std::isdigit(static_cast<unsigned char>(spec[k])); ++k)
            ++digits;
        if (digits == 0) throw ParseError("empty ket literal in product()", bar);
        return parse_ket_expression(spec, QuditRegister::qubits(static_cast<int>(digits)));
    }
    AnyState sub = catalog_state(spec);
    if (const auto* pure = std::get_if<PureState>(&sub)) return *pure;
    throw ShapeError("product() arguments must be pure states");
}

}  // namespace

AnyState catalog_state(const std::string& spec) {
    const SpecParts p = split_spec(strip(spec));
    if (p.name == "bell") return catalog::bell();
    if (p.name == "ghz") {
        const int n = int_arg(p, 0);
        if (p.args.size() > 1) return catalog::ghz_qudit(n, int_arg(p, 1));
        return catalog::ghz(n);
    }
    if (p.name == "w") return catalog::w(int_arg(p, 0));
    if (p.name == "phi4") return catalog::phi4();
    if (p.name == "phi6") return catalog::phi6();
    if (p.name == "werner") return catalog::werner(real_arg(p, 0));
    if (p.name == "product") {
        if (p.args.size() < 2) throw ParseError("product() needs two arguments");
        PureState acc = pure_sub_spec(p.args[0]);
        for (std::size_t k = 1; k < p.args.size(); ++k)
            acc = tensor_product(acc, pure_sub_spec(p.args[k]));
        return acc;
    }
    throw ParseError("unknown state \"" + p.name + "\"");
}

const QuditRegister& state_register(const AnyState& s) {
    return std::visit([](const auto& v) -> const QuditRegister& { return v.reg(); }, s);
}

}  // namespace qent
