#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dimerq/circuits.hpp"
#include "dimerq/measurement.hpp"
#include "oracles.hpp"

using namespace dimerq;
using std::numbers::pi;

namespace {

// full-register unitary the propagator circuit should realize:
// I ox exp(-i (H12/D) tau) ox I with the dimer on qubits 2,3
Eigen::MatrixXcd expected_propagator_16(double tau) {
  const Eigen::MatrixXcd id2 = Eigen::MatrixXcd::Identity(2, 2);
  return oracles::kron(id2, oracles::kron(dimer_propagator(tau), id2));
}

}  // namespace

TEST_CASE("theta_from_beta") {
  SUBCASE("limits") {
    CHECK(theta_from_beta(1e-9) == doctest::Approx(pi / 2).epsilon(1e-8));
    CHECK(theta_from_beta(50.0) == doctest::Approx(0.0));
  }

  SUBCASE("pinned value at beta = 2.12") {
    CHECK(theta_from_beta(2.12) == doctest::Approx(0.66702785909608).epsilon(1e-12));
  }

  SUBCASE("defining identity cos(theta) = tanh(beta/2)") {
    for (double beta : {0.1, 0.7, 2.12, 5.0, 10.0}) {
      CHECK(std::abs(std::cos(theta_from_beta(beta)) - std::tanh(beta / 2)) <
            1e-14);
    }
  }

  SUBCASE("equivalent half-angle form") {
    for (double beta : {0.3, 2.12, 6.0}) {
      const double theta = theta_from_beta(beta);
      const double expected = std::exp(beta / 2) / (2.0 * std::cosh(beta / 2));
      CHECK(std::cos(theta / 2) * std::cos(theta / 2) ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }

  SUBCASE("rejects nonpositive beta") {
    CHECK_THROWS_AS(theta_from_beta(0.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_from_beta(-2.0), std::invalid_argument);
  }
}

TEST_CASE("pure_ground_circuit") {
  SUBCASE("structure: RotX(-tau) on qubit 1 then CNOT(1,2)") {
    const double tau = 1.7;
    const Circuit c = pure_ground_circuit(tau);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.n_qubits == 2);
    CHECK(c.gates[0].kind == GateKind::RotX);
    CHECK(c.gates[0].target == 1);
    CHECK(c.gates[0].angle == -tau);
    CHECK(c.gates[1].kind == GateKind::Cnot);
    CHECK(c.gates[1].control == 1);
    CHECK(c.gates[1].target == 2);
  }

  SUBCASE("tau = pi/2 gives equal |00> and |11> probabilities") {
    const StateVector psi = run_circuit(pure_ground_circuit(pi / 2));
    CHECK(std::norm(psi.amplitudes(0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::norm(psi.amplitudes(3)) == doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("tau = 0 leaves the ground state") {
    const StateVector psi = run_circuit(pure_ground_circuit(0.0));
    CHECK(std::abs(psi.amplitudes(0) - Complex(1, 0)) < 1e-15);
  }

  SUBCASE("tau = 2pi/3 probabilities") {
    const StateVector psi = run_circuit(pure_ground_circuit(2.0 * pi / 3.0));
    CHECK(std::norm(psi.amplitudes(0)) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::norm(psi.amplitudes(3)) == doctest::Approx(0.75).epsilon(1e-12));
  }

  SUBCASE("matches the closed-form state up to global phase") {
    for (int i = 0; i <= 32; ++i) {
      const double tau = 2.0 * pi * i / 32.0;
      const StateVector circuit_state = run_circuit(pure_ground_circuit(tau));
      CHECK(state_distance_up_to_phase(circuit_state.amplitudes,
                                       pure_evolved_state(tau).amplitudes) <
            1e-12);
    }
  }
}

TEST_CASE("purification_prep_circuit") {
  SUBCASE("structure") {
    const Circuit c = purification_prep_circuit(2.12);
    REQUIRE(c.gates.size() == 4);
    CHECK(c.n_qubits == 4);
    CHECK(c.gates[0].kind == GateKind::RotY);
    CHECK(c.gates[0].target == 1);
    CHECK(c.gates[1].control == 1);
    CHECK(c.gates[1].target == 2);
    CHECK(c.gates[2].kind == GateKind::RotY);
    CHECK(c.gates[2].target == 3);
    CHECK(c.gates[3].control == 3);
    CHECK(c.gates[3].target == 4);
  }

  SUBCASE("very cold registers stay in |0000>") {
    const StateVector psi = run_circuit(purification_prep_circuit(50.0));
    CHECK(std::abs(psi.amplitudes(0) - Complex(1, 0)) < 1e-10);
  }

  SUBCASE("|0000> amplitude at beta = 2.12 is cos^2(theta/2)") {
    const StateVector psi = run_circuit(purification_prep_circuit(2.12));
    CHECK(psi.amplitudes(0).real() ==
          doctest::Approx(0.8928319295134718).epsilon(1e-12));
    CHECK(std::abs(psi.amplitudes(0).imag()) < 1e-15);
  }

  SUBCASE("the prepared state is two entangled pairs") {
    const double beta = 1.4;
    const double theta = theta_from_beta(beta);
    const StateVector psi = run_circuit(purification_prep_circuit(beta));
    Eigen::VectorXcd pair = Eigen::VectorXcd::Zero(4);
    pair(0) = std::cos(theta / 2);
    pair(3) = std::sin(theta / 2);
    const Eigen::VectorXcd expected = oracles::kron(pair, pair);
    CHECK(max_abs(psi.amplitudes - expected) < 1e-13);
  }

  SUBCASE("tracing the ancillas leaves the equilibrium dimer state") {
    for (int i = 0; i < 20; ++i) {
      const double beta = 0.1 + (10.0 - 0.1) * i / 19.0;
      const DensityMatrix rho =
          density_from_pure(run_circuit(purification_prep_circuit(beta)));
      const DensityMatrix reduced = partial_trace(rho, {2, 3});
      CHECK(max_abs(reduced.elements - thermal_density(beta).elements) < 1e-12);
    }
  }

  SUBCASE("each spin alone carries the one-qubit thermal weights") {
    const double beta = 2.12;
    const DensityMatrix rho =
        density_from_pure(run_circuit(purification_prep_circuit(beta)));
    const double z1 = 2.0 * std::cosh(beta / 2);
    for (int qubit : {2, 3}) {
      const DensityMatrix one = partial_trace(rho, {qubit});
      CHECK(one.elements(0, 0).real() ==
            doctest::Approx(std::exp(beta / 2) / z1).epsilon(1e-12));
      CHECK(one.elements(1, 1).real() ==
            doctest::Approx(std::exp(-beta / 2) / z1).epsilon(1e-12));
    }
  }
}

TEST_CASE("dimer_propagator_circuit") {
  SUBCASE("acts on qubits 2 and 3 of a 4-qubit register") {
    const Circuit c = dimer_propagator_circuit(0.9);
    CHECK(c.n_qubits == 4);
    CHECK(c.gates.size() == 8);
    for (const Gate& g : c.gates) {
      for (int q : g.acted_qubits()) {
        CHECK(q >= 2);
        CHECK(q <= 3);
      }
    }
  }

  SUBCASE("tau = 0 collapses to the identity up to phase") {
    const Eigen::MatrixXcd u = circuit_unitary(dimer_propagator_circuit(0.0));
    CHECK(matrix_distance_up_to_phase(u, Eigen::MatrixXcd::Identity(16, 16)) <
          1e-12);
  }

  SUBCASE("tau = pi pins the gate-order orientation") {
    // at tau = pi the exact propagator's {|00>,|11>} block is i*sigma_x;
    // a reversed gate order would not reproduce it up to a global phase
    const Eigen::MatrixXcd u = circuit_unitary(dimer_propagator_circuit(pi));
    CHECK(matrix_distance_up_to_phase(u, expected_propagator_16(pi)) < 1e-10);
    const Eigen::Matrix4cd block = dimer_propagator(pi);
    CHECK(std::abs(block(0, 3) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(block(0, 0)) < 1e-15);
  }

  SUBCASE("matches the exact propagator for random tau") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> taus(0.0, 4.0 * pi);
    for (int rep = 0; rep < 50; ++rep) {
      const double tau = taus(rng);
      const Eigen::MatrixXcd u = circuit_unitary(dimer_propagator_circuit(tau));
      CHECK(matrix_distance_up_to_phase(u, expected_propagator_16(tau)) < 1e-10);
    }
  }

  SUBCASE("prep + propagator reproduces the six-term closed-form state") {
    const double beta = 2.12;
    const double tau = pi / 2;
    const StateVector psi = run_circuit(
        concat(purification_prep_circuit(beta), dimer_propagator_circuit(tau)));
    const Eigen::VectorXcd reference =
        oracles::evolved_purified_state(theta_from_beta(beta), tau);
    const double overlap = std::abs(reference.dot(psi.amplitudes));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("thermal_full_circuit") {
  SUBCASE("twelve gates: four preparation + eight propagator") {
    const Circuit c = thermal_full_circuit(2.12, 1.0);
    CHECK(c.n_qubits == 4);
    CHECK(c.gates.size() == 12);
  }

  SUBCASE("dimer marginals match the closed forms across a grid") {
    for (double beta : {0.1, 0.5, 2.12, 5.0, 10.0}) {
      for (int i = 0; i <= 16; ++i) {
        const double tau = 2.0 * pi * i / 16.0;
        const StateVector psi = run_circuit(thermal_full_circuit(beta, tau));
        const std::vector<double> p = marginal_probabilities(psi, {2, 3});
        const auto expected = thermal_marginals_closed_form(beta, tau);
        for (int k = 0; k < 4; ++k) {
          CHECK(std::abs(p[std::size_t(k)] - expected[std::size_t(k)]) < 1e-12);
        }
      }
    }
  }

  SUBCASE("p01 and p10 are tau-independent") {
    const double beta = 2.12;
    const double theta = theta_from_beta(beta);
    const double expected = std::sin(theta) * std::sin(theta) / 4.0;
    for (double tau : {0.0, 0.9, 2.2, 5.0}) {
      const auto p = thermal_marginals_closed_form(beta, tau);
      CHECK(p[1] == doctest::Approx(expected).epsilon(1e-13));
      CHECK(p[2] == doctest::Approx(expected).epsilon(1e-13));
    }
  }

  SUBCASE("reduced dimer matrix has the -i/2 sin(tau) cos(theta) corner") {
    const double beta = 2.12;
    const double theta = theta_from_beta(beta);
    for (double tau : {0.3, 1.2, 2.9}) {
      const DensityMatrix rho =
          density_from_pure(run_circuit(thermal_full_circuit(beta, tau)));
      const DensityMatrix reduced = partial_trace(rho, {2, 3});
      const Complex expected(0.0, -0.5 * std::sin(tau) * std::cos(theta));
      CHECK(std::abs(reduced.elements(0, 3) - expected) < 1e-12);
    }
  }

  SUBCASE("cold limit at tau = 0 concentrates on p00") {
    const auto p = thermal_marginals_closed_form(50.0, 0.0);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("experiment spec types") {
  const ThermalExperimentSpec spec{ThermalParameters(2.12), 0.8};
  CHECK(spec.theta == doctest::Approx(theta_from_beta(2.12)));
  CHECK(std::abs(std::cos(spec.theta) - std::tanh(spec.thermal.beta / 2)) < 1e-14);
  CHECK(spec.theta > 0.0);
  CHECK(spec.theta < pi / 2);

  const PureExperimentSpec pure{1.0};
  CHECK(pure.tau == 1.0);
}
