#include "dimerq/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dimerq {

namespace {

void check_tau(double tau) {
  if (!std::isfinite(tau)) {
    throw std::invalid_argument("tau must be finite");
  }
}

}  // namespace

ThermalExperimentSpec::ThermalExperimentSpec(ThermalParameters thermal_in, double tau_in)
    : thermal(thermal_in), tau(tau_in), theta(theta_from_beta(thermal_in.beta)) {
  check_tau(tau);
}

double theta_from_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("theta_from_beta: beta must be positive and finite");
  }
  return std::acos(std::tanh(beta / 2.0));
}

Circuit pure_ground_circuit(double tau) {
  check_tau(tau);
  return Circuit{2, {Gate::rx(1, -tau), Gate::cnot(1, 2)}};
}

Circuit purification_prep_circuit(double beta) {
  const double theta = theta_from_beta(beta);
  return Circuit{4,
                 {Gate::ry(1, theta), Gate::cnot(1, 2),
                  Gate::ry(3, theta), Gate::cnot(3, 4)}};
}

Circuit dimer_propagator_circuit(double tau) {
  check_tau(tau);
  constexpr double half_pi = std::numbers::pi / 2.0;
  // Application order is the reverse of the operator product in the header
  // comment (rightmost factor acts first).
  return Circuit{4,
                 {Gate::rx(3, half_pi), Gate::rx(2, -half_pi),
                  Gate::cnot(2, 3),
                  Gate::rz(3, -tau / 2.0), Gate::rx(2, -tau / 2.0),
                  Gate::cnot(2, 3),
                  Gate::rx(3, -half_pi), Gate::rx(2, half_pi)}};
}

Circuit thermal_full_circuit(double beta, double tau) {
  return concat(purification_prep_circuit(beta), dimer_propagator_circuit(tau));
}

std::array<double, 4> thermal_marginals_closed_form(double beta, double tau) {
  check_tau(tau);
  const double theta = theta_from_beta(beta);
  const double ct = std::cos(tau);
  const double cth = std::cos(theta);
  const double c2th = std::cos(2.0 * theta);
  const double sth = std::sin(theta);
  const double p00 = (3.0 + 4.0 * ct * cth + c2th) / 8.0;
  const double p11 = (3.0 - 4.0 * ct * cth + c2th) / 8.0;
  const double p01 = sth * sth / 4.0;
  return {p00, p01, p01, p11};
}

}  // namespace dimerq
