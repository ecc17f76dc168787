#pragma once

#include <string>
#include <variant>

#include "qent/density_matrix.hpp"
#include "qent/pure_state.hpp"

namespace qent {

using AnyState = std::variant<PureState, DensityMatrix>;

namespace catalog {

/// (|01> - |10>)/sqrt(2), the singlet.
PureState bell();
/// (|0...0> + |1...1>)/sqrt(2) over n qubits (n >= 2).
PureState ghz(int n);
/// (sum_k |k>^{tensor m}) / sqrt(d): the d-level analog of GHZ.
PureState ghz_qudit(int m, int d);
/// Equal superposition of the n single-excitation basis states (n >= 2).
PureState w(int n);
/// (|0000> + |0011> + |1100> - |1111>)/2.
PureState phi4();
/// Equal superposition of the six two-excitation four-qubit basis states.
PureState phi6();
/// F |psi-><psi-| + (1-F)/3 (I - |psi-><psi-|), 0 <= F <= 1.
DensityMatrix werner(double fidelity);

}  // namespace catalog

/// Looks up a state by textual spec: "bell", "ghz:3" (or "ghz(3)"), "w:4",
/// "phi4", "phi6", "werner:0.75", "product(a,b)" with pure sub-specs or qubit
/// ket literals as arguments.
AnyState catalog_state(const std::string& spec);

const QuditRegister& state_register(const AnyState& s);

}  // namespace qent
