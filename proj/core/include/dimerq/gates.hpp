#pragma once

#include <string>
#include <vector>

#include "dimerq/state.hpp"

namespace dimerq {

enum class GateKind { RotX, RotY, RotZ, Cnot };

// One gate of a circuit. Rotations are R(theta) = exp(-i*theta/2 * sigma),
// so RotX by -tau sends |0> to cos(tau/2)|0> + i*sin(tau/2)|1>. Qubit
// indices are 1-based.
struct Gate {
  GateKind kind = GateKind::RotX;
  double angle = 0.0;  // radians; unused for Cnot
  int target = 0;
  int control = 0;     // Cnot only, 0 otherwise

  static Gate rx(int qubit, double angle);
  static Gate ry(int qubit, double angle);
  static Gate rz(int qubit, double angle);
  static Gate cnot(int control, int target);

  std::vector<int> acted_qubits() const;
};

// Ordered gate list; gates[0] is applied to the state first.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

// Matrix entries follow exp(-i*theta/2 * sigma_axis); throws on non-finite
// angles.
Eigen::Matrix2cd rotation_matrix(GateKind kind, double angle);

// Permutation matrix of the controlled NOT in the basis {00,01,10,11}
// (first qubit controls).
Eigen::Matrix4cd cnot_matrix();

StateVector apply_gate(const StateVector& psi, const Gate& g);
StateVector apply_circuit(const StateVector& psi, const Circuit& c);
// apply_circuit starting from |00...0>.
StateVector run_circuit(const Circuit& c);

// Gate matrix embedded in the full register via Kronecker products. This is
// a deliberately separate code path from apply_gate's bit-sliced amplitude
// update, so the two can check each other.
Eigen::MatrixXcd embed_gate(const Gate& g, int n_qubits);

// Product of embedded gate matrices in application order.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

Circuit concat(Circuit a, const Circuit& b);

void validate_circuit(const Circuit& c);

// OpenQASM 2.0 serialization, one gate per line, angles printed with 17
// significant digits. Circuit qubit i maps to register element q[i-1].
std::string to_qasm(const Circuit& c);

}  // namespace dimerq
