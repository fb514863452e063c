#include "dimerq/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dimerq {

namespace {

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

IntensityRecord simulate_pure(double tau, const SweepConfig& config,
                              std::uint64_t point_seed) {
  const Circuit circuit = pure_ground_circuit(tau);
  const std::vector<int> subset{1, 2};

  if (config.shots == 0) {
    std::vector<double> probs;
    if (config.noise_p > 0.0) {
      probs = marginal_probabilities(run_with_noise(circuit, {config.noise_p}), subset);
    } else {
      probs = marginal_probabilities(run_circuit(circuit), subset);
    }
    return estimate_pure_intensities(probs[0], probs[3], tau,
                                     IntensitySource::ExactCircuit);
  }

  ShotHistogram hist;
  if (config.noise_p > 0.0) {
    hist = sample(run_with_noise(circuit, {config.noise_p}), subset, config.shots,
                  point_seed);
  } else {
    hist = sample(run_circuit(circuit), subset, config.shots, point_seed);
  }
  const std::vector<double> f = frequencies(hist);
  return estimate_pure_intensities(f[0], f[3], tau, IntensitySource::Sampled);
}

IntensityRecord simulate_thermal(double tau, const SweepConfig& config,
                                 std::uint64_t point_seed) {
  const Circuit circuit = thermal_full_circuit(config.beta, tau);
  const std::vector<int> subset{2, 3};

  if (config.shots == 0) {
    std::vector<double> probs;
    if (config.noise_p > 0.0) {
      probs = marginal_probabilities(run_with_noise(circuit, {config.noise_p}), subset);
    } else {
      probs = marginal_probabilities(run_circuit(circuit), subset);
    }
    return estimate_thermal_intensities({probs[0], probs[1], probs[2], probs[3]},
                                        tau, config.beta,
                                        IntensitySource::ExactCircuit);
  }

  ShotHistogram hist;
  if (config.noise_p > 0.0) {
    hist = sample(run_with_noise(circuit, {config.noise_p}), subset, config.shots,
                  point_seed);
  } else {
    hist = sample(run_circuit(circuit), subset, config.shots, point_seed);
  }
  return estimate_thermal_intensities(hist, tau, config.beta);
}

}  // namespace

void validate_config(const SweepConfig& config) {
  if (config.points < 2) {
    throw std::invalid_argument("SweepConfig: points must be >= 2");
  }
  if (!std::isfinite(config.tau_start) || !std::isfinite(config.tau_end) ||
      config.tau_start >= config.tau_end) {
    throw std::invalid_argument("SweepConfig: need tau_start < tau_end, both finite");
  }
  if (!(config.noise_p >= 0.0) || !(config.noise_p <= 1.0)) {
    throw std::invalid_argument("SweepConfig: noise_p must lie in [0, 1]");
  }
  if (config.experiment == Experiment::Thermal &&
      (!(config.beta > 0.0) || !std::isfinite(config.beta))) {
    throw std::invalid_argument("SweepConfig: beta must be positive and finite");
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate_config(config);
  const double step =
      (config.tau_end - config.tau_start) / static_cast<double>(config.points - 1);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(config.points));
  for (int i = 0; i < config.points; ++i) {
    const double tau = config.tau_start + step * i;
    const std::uint64_t point_seed = config.seed + static_cast<std::uint64_t>(i);

    IntensityRecord analytic;
    IntensityRecord sim;
    if (config.experiment == Experiment::Pure) {
      analytic = analytic_intensities_pure(tau);
      sim = simulate_pure(tau, config, point_seed);
    } else {
      analytic = analytic_intensities_thermal(config.beta, tau);
      sim = simulate_thermal(tau, config, point_seed);
    }
    rows.push_back({tau, analytic.j0, analytic.j_plus2, sim.j0, sim.j_plus2,
                    sim.source});
  }
  return rows;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << "tau,J0_analytic,J2_analytic,J0_sim,J2_sim,source\n";
  for (const SweepRow& row : rows) {
    os << fmt15(row.tau) << ',' << fmt15(row.j0_analytic) << ','
       << fmt15(row.j2_analytic) << ',' << fmt15(row.j0_sim) << ','
       << fmt15(row.j2_sim) << ',' << to_string(row.source) << '\n';
  }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(rows, os);
  return os.str();
}

void run_sweep_to_file(const SweepConfig& config) {
  const std::vector<SweepRow> rows = run_sweep(config);
  std::ofstream file(config.out);
  if (!file) {
    throw IoError("cannot open output file: " + config.out);
  }
  write_csv(rows, file);
  file.flush();
  if (!file) {
    throw IoError("failed writing output file: " + config.out);
  }
}

std::string export_circuit_text(Experiment experiment, double beta, double tau) {
  if (experiment == Experiment::Pure) {
    return to_qasm(pure_ground_circuit(tau));
  }
  return to_qasm(thermal_full_circuit(beta, tau));
}

void export_circuit(Experiment experiment, double beta, double tau,
                    const std::string& path) {
  const std::string text = export_circuit_text(experiment, beta, tau);
  std::ofstream file(path);
  if (!file) {
    throw IoError("cannot open output file: " + path);
  }
  file << text;
  file.flush();
  if (!file) {
    throw IoError("failed writing output file: " + path);
  }
}

}  // namespace dimerq
