#pragma once

#include <iosfwd>
#include <stdexcept>

#include "dimerq/measurement.hpp"

namespace dimerq {

enum class Experiment { Pure, Thermal };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter sweep over tau. shots == 0 means exact probabilities; with
// noise_p > 0 the simulation runs through the density-matrix noise
// pipeline. Grid point i samples with seed + i.
struct SweepConfig {
  Experiment experiment = Experiment::Pure;
  double beta = 2.12;     // thermal experiment only
  double tau_start = 0.0;
  double tau_end = 6.283185307179586476925286766559;  // 2*pi
  int points = 65;
  std::uint64_t shots = 0;
  double noise_p = 0.0;
  std::uint64_t seed = 12345;
  std::string out;        // CSV path; empty when the caller writes itself
};

struct SweepRow {
  double tau;
  double j0_analytic;
  double j2_analytic;
  double j0_sim;
  double j2_sim;
  IntensitySource source;
};

// Throws std::invalid_argument on bad configs (points < 2,
// tau_start >= tau_end, noise outside [0,1], bad beta, ...).
void validate_config(const SweepConfig& config);

std::vector<SweepRow> run_sweep(const SweepConfig& config);

// CSV with the fixed header
//   tau,J0_analytic,J2_analytic,J0_sim,J2_sim,source
// and numbers printed with 15 significant digits. Identical configs yield
// byte-identical output.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& os);
std::string to_csv(const std::vector<SweepRow>& rows);

// run_sweep + CSV emission to config.out. Throws IoError when the path is
// unwritable.
void run_sweep_to_file(const SweepConfig& config);

// Assembly export of one experiment circuit: pure_ground_circuit(tau) or
// thermal_full_circuit(beta, tau). Deterministic bytes.
std::string export_circuit_text(Experiment experiment, double beta, double tau);
void export_circuit(Experiment experiment, double beta, double tau,
                    const std::string& path);

}  // namespace dimerq
