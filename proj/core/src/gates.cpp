#include "dimerq/gates.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace dimerq {

namespace {

void check_qubit_positive(int q) {
  if (q < 1) {
    throw std::invalid_argument("Gate: qubit index must be >= 1, got " +
                                std::to_string(q));
  }
}

void check_in_register(int q, int n) {
  if (q < 1 || q > n) {
    throw std::invalid_argument("Gate: qubit index " + std::to_string(q) +
                                " outside register of " + std::to_string(n) +
                                " qubits");
  }
}

Gate make_rotation(GateKind kind, int qubit, double angle) {
  check_qubit_positive(qubit);
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("Gate: rotation angle must be finite");
  }
  return Gate{kind, angle, qubit, 0};
}

const char* qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::RotX: return "rx";
    case GateKind::RotY: return "ry";
    case GateKind::RotZ: return "rz";
    case GateKind::Cnot: return "cx";
  }
  return "?";
}

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

}  // namespace

Gate Gate::rx(int qubit, double angle) { return make_rotation(GateKind::RotX, qubit, angle); }
Gate Gate::ry(int qubit, double angle) { return make_rotation(GateKind::RotY, qubit, angle); }
Gate Gate::rz(int qubit, double angle) { return make_rotation(GateKind::RotZ, qubit, angle); }

Gate Gate::cnot(int control, int target) {
  check_qubit_positive(control);
  check_qubit_positive(target);
  if (control == target) {
    throw std::invalid_argument("Gate: CNOT control and target must be distinct");
  }
  return Gate{GateKind::Cnot, 0.0, target, control};
}

std::vector<int> Gate::acted_qubits() const {
  if (kind == GateKind::Cnot) return {control, target};
  return {target};
}

Eigen::Matrix2cd rotation_matrix(GateKind kind, double angle) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("rotation_matrix: angle must be finite");
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  Eigen::Matrix2cd u;
  switch (kind) {
    case GateKind::RotX:
      u << Complex(c, 0), Complex(0, -s),
           Complex(0, -s), Complex(c, 0);
      return u;
    case GateKind::RotY:
      u << Complex(c, 0), Complex(-s, 0),
           Complex(s, 0), Complex(c, 0);
      return u;
    case GateKind::RotZ:
      u << Complex(c, -s), Complex(0, 0),
           Complex(0, 0), Complex(c, s);
      return u;
    case GateKind::Cnot:
      break;
  }
  throw std::invalid_argument("rotation_matrix: CNOT is not a rotation");
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

StateVector apply_gate(const StateVector& psi, const Gate& g) {
  const int n = psi.n_qubits;
  const std::size_t dim = dimension(n);
  StateVector out = psi;

  if (g.kind == GateKind::Cnot) {
    check_in_register(g.control, n);
    check_in_register(g.target, n);
    const std::size_t cm = qubit_mask(n, g.control);
    const std::size_t tm = qubit_mask(n, g.target);
    for (std::size_t i = 0; i < dim; ++i) {
      if ((i & cm) && !(i & tm)) {
        std::swap(out.amplitudes(static_cast<Eigen::Index>(i)),
                  out.amplitudes(static_cast<Eigen::Index>(i | tm)));
      }
    }
    return out;
  }

  check_in_register(g.target, n);
  const Eigen::Matrix2cd u = rotation_matrix(g.kind, g.angle);
  const std::size_t tm = qubit_mask(n, g.target);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & tm) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i | tm);
    const Complex a0 = psi.amplitudes(i0);
    const Complex a1 = psi.amplitudes(i1);
    out.amplitudes(i0) = u(0, 0) * a0 + u(0, 1) * a1;
    out.amplitudes(i1) = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return out;
}

StateVector apply_circuit(const StateVector& psi, const Circuit& c) {
  if (psi.n_qubits != c.n_qubits) {
    throw std::invalid_argument("apply_circuit: register sizes differ");
  }
  StateVector state = psi;
  for (const Gate& g : c.gates) state = apply_gate(state, g);
  return state;
}

StateVector run_circuit(const Circuit& c) {
  return apply_circuit(ground_state(c.n_qubits), c);
}

Eigen::MatrixXcd embed_gate(const Gate& g, int n_qubits) {
  dimension(n_qubits);  // capacity guard

  auto chain = [&](int at, const Eigen::MatrixXcd& local) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 1; q <= n_qubits; ++q) {
      m = kron(m, q == at ? local
                          : static_cast<Eigen::MatrixXcd>(Eigen::MatrixXcd::Identity(2, 2)));
    }
    return m;
  };

  if (g.kind != GateKind::Cnot) {
    check_in_register(g.target, n_qubits);
    return chain(g.target, rotation_matrix(g.kind, g.angle));
  }

  check_in_register(g.control, n_qubits);
  check_in_register(g.target, n_qubits);
  // CNOT = |0><0|_c ox I + |1><1|_c ox X_t
  Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(2, 2);
  Eigen::MatrixXcd p1 = Eigen::MatrixXcd::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;

  Eigen::MatrixXcd keep = Eigen::MatrixXcd::Identity(1, 1);
  Eigen::MatrixXcd flip = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 1; q <= n_qubits; ++q) {
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    keep = kron(keep, q == g.control ? p0 : id);
    flip = kron(flip, q == g.control ? p1 : (q == g.target ? x : id));
  }
  return keep + flip;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  validate_circuit(c);
  const auto dim = static_cast<Eigen::Index>(dimension(c.n_qubits));
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : c.gates) u = embed_gate(g, c.n_qubits) * u;
  return u;
}

Circuit concat(Circuit a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("concat: register sizes differ");
  }
  a.gates.insert(a.gates.end(), b.gates.begin(), b.gates.end());
  return a;
}

void validate_circuit(const Circuit& c) {
  dimension(c.n_qubits);
  for (const Gate& g : c.gates) {
    for (int q : g.acted_qubits()) check_in_register(q, c.n_qubits);
  }
}

std::string to_qasm(const Circuit& c) {
  validate_circuit(c);
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Cnot) {
      out += std::string(qasm_name(g.kind)) + " q[" + std::to_string(g.control - 1) +
             "],q[" + std::to_string(g.target - 1) + "];\n";
    } else {
      out += std::string(qasm_name(g.kind)) + "(" + format_angle(g.angle) + ") q[" +
             std::to_string(g.target - 1) + "];\n";
    }
  }
  return out;
}

}  // namespace dimerq
