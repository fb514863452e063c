#pragma once

#include "dimerq/gates.hpp"
#include "dimerq/nmr.hpp"

namespace dimerq {

// The two experiments: evolution of the pure ground state on a 2-qubit
// register, and evolution of the purified equilibrium state on a 4-qubit
// register where the dimer is qubits {2,3} and the ancillas are {1,4}.

struct PureExperimentSpec {
  double tau = 0.0;
};

struct ThermalExperimentSpec {
  ThermalExperimentSpec(ThermalParameters thermal, double tau);
  ThermalParameters thermal;
  double tau;
  double theta;  // purification angle, derived: cos(theta) = tanh(beta/2)
};

// arccos(tanh(beta/2)); equivalently cos^2(theta/2) = e^{beta/2} /
// (2 cosh(beta/2)). Decreases from pi/2 (beta -> 0) to 0 (beta -> inf);
// underflows to exactly 0 for beta >~ 38 in double precision.
double theta_from_beta(double beta);

// Two gates: RotX(-tau) on qubit 1, then CNOT(1->2). Acting on |00> this
// produces cos(tau/2)|00> + i sin(tau/2)|11>.
Circuit pure_ground_circuit(double tau);

// Four gates preparing (cos(theta/2)|00> + sin(theta/2)|11>)^{ox2} on four
// qubits; tracing out the ancillas {1,4} leaves the dimer qubits {2,3} in
// the equilibrium state thermal_density(beta).
Circuit purification_prep_circuit(double beta);

// Gate realization of exp(-i (H12/D) tau) on qubits 2 and 3, read
// right-to-left from the operator product
//   Rx2(pi/2) Rx3(-pi/2) C23 Rx2(-tau/2) Rz3(-tau/2) C23 Rx2(-pi/2) Rx3(pi/2)
// (the builder performs the reversal once; a unit test pins the
// orientation). Equals the exact propagator up to a global phase.
Circuit dimer_propagator_circuit(double tau);

// purification_prep_circuit followed by dimer_propagator_circuit.
Circuit thermal_full_circuit(double beta, double tau);

// Closed forms of the dimer-qubit marginals of the evolved 4-qubit state:
//   p00 = (3 + 4 cos(tau) cos(theta) + cos(2 theta)) / 8
//   p11 = (3 - 4 cos(tau) cos(theta) + cos(2 theta)) / 8
//   p01 = p10 = sin^2(theta) / 4
// ordered {p00, p01, p10, p11}.
std::array<double, 4> thermal_marginals_closed_form(double beta, double tau);

}  // namespace dimerq
