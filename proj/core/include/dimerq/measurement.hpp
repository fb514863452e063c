#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "dimerq/circuits.hpp"

namespace dimerq {

// Counts of projective measurements over a declared qubit subset. Keys are
// bitstrings in the subset's order (subset[0] is the leftmost character).
// Zero-count cells are legal. sum(counts) == shots.
//
// JSON form (also the ingestion format for externally produced histograms):
//   {"shots": N, "seed": S, "subset": [2,3], "counts": {"00": n00, ...}}
struct ShotHistogram {
  std::vector<int> subset;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

// Depolarizing probability applied once per gate, on the gate's acted
// qubits, in the density-matrix pipeline.
struct NoiseModel {
  double p_depolarizing = 0.0;  // in [0, 1]
};

// Exact marginal distribution of the subset, indexed by the subset
// bitstring read as an integer (subset[0] = most significant bit).
std::vector<double> marginal_probabilities(const StateVector& psi,
                                           std::span<const int> subset);
std::vector<double> marginal_probabilities(const DensityMatrix& rho,
                                           std::span<const int> subset);
std::vector<double> marginal_probabilities(const StateVector& psi,
                                           std::initializer_list<int> subset);
std::vector<double> marginal_probabilities(const DensityMatrix& rho,
                                           std::initializer_list<int> subset);

// Draws `shots` samples from the subset marginal. Deterministic given the
// seed: the PRNG is std::mt19937_64 and each draw uses
// u = (next() >> 11) * 2^-53 with inverse-CDF lookup in bitstring order;
// this is fixed so CSV output is byte-reproducible. Parallel sweeps must
// derive per-point seeds as base_seed + grid_index.
ShotHistogram sample(const StateVector& psi, std::span<const int> subset,
                     std::uint64_t shots, std::uint64_t seed);
ShotHistogram sample(const DensityMatrix& rho, std::span<const int> subset,
                     std::uint64_t shots, std::uint64_t seed);
ShotHistogram sample(const StateVector& psi, std::initializer_list<int> subset,
                     std::uint64_t shots, std::uint64_t seed);
ShotHistogram sample(const DensityMatrix& rho, std::initializer_list<int> subset,
                     std::uint64_t shots, std::uint64_t seed);

// counts -> frequencies over the 2^k subset outcomes, in bitstring order.
std::vector<double> frequencies(const ShotHistogram& hist);

// Plug-in estimators. a1, a2 are the measured probabilities of |00> and
// |11>: J0 = (2 a1 - 1)^2, J_{+-2} = 2 a1 a2.
IntensityRecord estimate_pure_intensities(double a1, double a2, double tau,
                                          IntensitySource source);

// From dimer-qubit probabilities {p00, p01, p10, p11}:
//   J0 = cos(tau) (p00 - p11)
//   J_{+-2} = (tanh(beta/2) - J0) / 2   (coherence-sum conservation; the
// +-2 coherences are invisible to computational-basis readout).
IntensityRecord estimate_thermal_intensities(const std::array<double, 4>& probs,
                                             double tau, double beta,
                                             IntensitySource source);
// Same, from a histogram that must cover exactly the dimer qubits {2,3}.
IntensityRecord estimate_thermal_intensities(const ShotHistogram& hist,
                                             double tau, double beta);

// rho -> (1-p) rho + p * (Tr_S rho ox I/2^|S|) with the mixed factor
// reassembled at the acted positions. Trace- and positivity-preserving.
DensityMatrix apply_depolarizing(const DensityMatrix& rho,
                                 std::span<const int> acted_qubits, double p);
DensityMatrix apply_depolarizing(const DensityMatrix& rho,
                                 std::initializer_list<int> acted_qubits,
                                 double p);

// Density-matrix pipeline mirroring the circuit gate-for-gate: each gate
// unitary is followed by the depolarizing channel on its acted qubits.
DensityMatrix run_with_noise(const Circuit& c, const NoiseModel& noise);

std::string to_json(const ShotHistogram& hist);
ShotHistogram histogram_from_json(const std::string& text);

}  // namespace dimerq
