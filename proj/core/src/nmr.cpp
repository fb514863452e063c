#include "dimerq/nmr.hpp"

#include <cmath>
#include <stdexcept>

namespace dimerq {

namespace {

constexpr double kSaturationBeta = 700.0;

void check_tau(double tau) {
  if (!std::isfinite(tau)) {
    throw std::invalid_argument("tau must be finite");
  }
}

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta must be positive and finite");
  }
}

}  // namespace

DipolarDimer::DipolarDimer(double coupling_rad_per_s) : coupling(coupling_rad_per_s) {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("DipolarDimer: coupling must be positive and finite");
  }
}

ThermalParameters::ThermalParameters(double beta_in) : beta(beta_in) {
  check_beta(beta);
}

const char* to_string(IntensitySource s) {
  switch (s) {
    case IntensitySource::Analytic: return "analytic";
    case IntensitySource::ExactCircuit: return "exact-circuit";
    case IntensitySource::Sampled: return "sampled";
  }
  return "?";
}

Eigen::Matrix4cd h12_matrix(double coupling) {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("h12_matrix: coupling must be positive and finite");
  }
  // I1+I2+ sends |11> to |00>, I1-I2- sends |00> to |11>; everything else
  // is annihilated, so only the (00,11) corners survive.
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 3) = -coupling / 2.0;
  h(3, 0) = -coupling / 2.0;
  return h;
}

Eigen::Matrix4cd dimer_propagator(double tau) {
  check_tau(tau);
  // H12/D restricted to {|00>,|11>} is -sigma_x/2; the exponential is a
  // rotation of that block and the identity on |01>, |10>.
  const double c = std::cos(tau / 2.0);
  const double s = std::sin(tau / 2.0);
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  u(0, 0) = Complex(c, 0);
  u(3, 3) = Complex(c, 0);
  u(0, 3) = Complex(0, s);
  u(3, 0) = Complex(0, s);
  return u;
}

StateVector pure_evolved_state(double tau) {
  check_tau(tau);
  StateVector psi{2, Eigen::VectorXcd::Zero(4)};
  psi.amplitudes(0) = Complex(std::cos(tau / 2.0), 0.0);
  psi.amplitudes(3) = Complex(0.0, std::sin(tau / 2.0));
  return psi;
}

IntensityRecord analytic_intensities_pure(double tau) {
  check_tau(tau);
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  return {tau, c * c, s * s / 2.0, s * s / 2.0, IntensitySource::Analytic};
}

DensityMatrix thermal_density(double beta, bool* saturated) {
  check_beta(beta);
  if (saturated != nullptr) *saturated = beta > kSaturationBeta;
  // Divide numerator and denominator by e^beta: with x = e^-beta,
  // Z = e^beta (1+x)^2 and the diagonal becomes (1, x, x, x^2)/(1+x)^2.
  const double x = std::exp(-beta);
  const double denom = (1.0 + x) * (1.0 + x);
  DensityMatrix rho{2, Eigen::MatrixXcd::Zero(4, 4)};
  rho.elements(0, 0) = 1.0 / denom;
  rho.elements(1, 1) = x / denom;
  rho.elements(2, 2) = x / denom;
  rho.elements(3, 3) = x * x / denom;
  return rho;
}

DensityMatrix thermal_evolved_density(double beta, double tau, bool* saturated) {
  check_tau(tau);
  DensityMatrix rho = thermal_density(beta, saturated);
  const double x = std::exp(-beta);
  const double denom = (1.0 + x) * (1.0 + x);
  const double cosh_over_z = (1.0 + x * x) / (2.0 * denom);  // cosh(b)/Z
  const double sinh_over_z = (1.0 - x * x) / (2.0 * denom);  // sinh(b)/Z
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  rho.elements(0, 0) = cosh_over_z + c * sinh_over_z;
  rho.elements(3, 3) = cosh_over_z - c * sinh_over_z;
  rho.elements(0, 3) = Complex(0.0, -s * sinh_over_z);
  rho.elements(3, 0) = Complex(0.0, s * sinh_over_z);
  return rho;
}

IntensityRecord analytic_intensities_thermal(double beta, double tau) {
  check_beta(beta);
  check_tau(tau);
  const double pol = std::tanh(beta / 2.0);
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  return {tau, c * c * pol, s * s * pol / 2.0, s * s * pol / 2.0,
          IntensitySource::Analytic};
}

IntensityRecord general_coherence_intensities(const DensityMatrix& rho0, double tau) {
  check_tau(tau);
  if (rho0.n_qubits != 2 || rho0.elements.rows() != 4 || rho0.elements.cols() != 4) {
    throw std::invalid_argument(
        "general_coherence_intensities: expected a 2-qubit density matrix");
  }
  const Eigen::Matrix4cd u = dimer_propagator(tau);
  const Eigen::MatrixXcd rho_t = u * rho0.elements * u.adjoint();

  const CollectiveSpinZ iz = collective_spin_z(2);
  const Eigen::MatrixXcd detect =
      u * Eigen::MatrixXcd(iz.weights.cast<Complex>().asDiagonal()) * u.adjoint();

  const auto rho_blocks = coherence_blocks(rho_t, iz);
  const auto detect_blocks = coherence_blocks(detect, iz);

  auto intensity = [&](int order) {
    return (rho_blocks.at(order) * detect_blocks.at(-order)).trace().real();
  };
  return {tau, intensity(0), intensity(2), intensity(-2), IntensitySource::Analytic};
}

}  // namespace dimerq
