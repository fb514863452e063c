#pragma once

#include "dimerq/state.hpp"

namespace dimerq {

// Two-spin dimer coupled by the two-quantum average dipolar interaction
// H12 = -(D/2)(I1+ I2+ + I1- I2-), which only connects |00> and |11>.
// The coupling enters all dynamics through the dimensionless time
// tau = D * t, so the interfaces below take tau directly.
struct DipolarDimer {
  explicit DipolarDimer(double coupling_rad_per_s);
  double coupling;  // rad/s, > 0

  double tau_at(double time_s) const { return coupling * time_s; }
};

// Dimensionless inverse temperature beta = hbar*omega0 / (k*T); the
// physical constants are never needed separately.
struct ThermalParameters {
  explicit ThermalParameters(double beta);
  double beta;  // > 0 and finite
};

enum class IntensitySource { Analytic, ExactCircuit, Sampled };

const char* to_string(IntensitySource s);

// Coherence intensities at one dimensionless time. J_plus2 == J_minus2 for
// analytic and exact-circuit records.
struct IntensityRecord {
  double tau = 0.0;
  double j0 = 0.0;
  double j_plus2 = 0.0;
  double j_minus2 = 0.0;
  IntensitySource source = IntensitySource::Analytic;
};

// H12 in the basis {00,01,10,11}: -coupling/2 at the (00,11) corners.
Eigen::Matrix4cd h12_matrix(double coupling = 1.0);

// exp(-i (H12/D) tau), evaluated in closed form as a rotation of the
// {|00>,|11>} block.
Eigen::Matrix4cd dimer_propagator(double tau);

// cos(tau/2)|00> + i sin(tau/2)|11>
StateVector pure_evolved_state(double tau);

// J0 = cos^2(tau), J_{+-2} = sin^2(tau)/2.
IntensityRecord analytic_intensities_pure(double tau);

// Equilibrium state exp(beta*Iz)/Z, Z = 2(1+cosh beta): the diagonal
// (e^beta, 1, 1, e^-beta)/Z, equal to the tensor product of the one-spin
// thermal states. Computed in the e^-beta form, which is stable for any
// beta; for beta > 700 the result saturates to the |00> projector and
// *saturated (when given) is set.
DensityMatrix thermal_density(double beta, bool* saturated = nullptr);

// Closed form of U rho(0) U^dagger: diagonal
// (cosh b + cos tau sinh b, 1, 1, cosh b - cos tau sinh b)/Z with corners
// -+ i sin(tau) sinh(b)/Z.
DensityMatrix thermal_evolved_density(double beta, double tau,
                                      bool* saturated = nullptr);

// J0 = cos^2(tau) tanh(beta/2), J_{+-2} = sin^2(tau) tanh(beta/2) / 2.
// tanh(beta/2) is the equilibrium polarization Tr(rho(0) Iz); it makes the
// beta -> infinity limit reproduce the pure-state intensities.
IntensityRecord analytic_intensities_thermal(double beta, double tau);

// Intensities of an arbitrary two-qubit initial state: with
// U = dimer_propagator(tau), rho(tau) = U rho0 U^dagger and
// detect = U Iz U^dagger,
//   J_n = Tr(rho_n(tau) * detect_{-n}),   n in {0, +2, -2},
// where the subscripts select coherence-order blocks. Reproduces both
// closed-form intensity functions on their initial states.
IntensityRecord general_coherence_intensities(const DensityMatrix& rho0,
                                              double tau);

}  // namespace dimerq
