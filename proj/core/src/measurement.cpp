#include "dimerq/measurement.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace dimerq {

namespace {

// Resolved bit positions of a declared subset within the full register;
// subset[0] is the most significant bit of the marginal index.
std::vector<std::size_t> subset_bits(int n_qubits, std::span<const int> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("measurement subset must not be empty");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_qubits) + 1, false);
  std::vector<std::size_t> bits;
  bits.reserve(subset.size());
  for (int q : subset) {
    if (q < 1 || q > n_qubits) {
      throw std::invalid_argument("measurement subset: qubit index " +
                                  std::to_string(q) + " out of range");
    }
    if (seen[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("measurement subset: duplicate qubit index " +
                                  std::to_string(q));
    }
    seen[static_cast<std::size_t>(q)] = true;
    bits.push_back(qubit_bit(n_qubits, q));
  }
  return bits;
}

std::size_t marginal_index(std::size_t full, const std::vector<std::size_t>& bits) {
  std::size_t m = 0;
  for (std::size_t b : bits) m = (m << 1) | ((full >> b) & 1u);
  return m;
}

std::string bitstring(std::size_t value, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((value >> (width - 1 - j)) & 1u) s[j] = '1';
  }
  return s;
}

ShotHistogram sample_distribution(const std::vector<double>& probs,
                                  std::span<const int> subset,
                                  std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample: shots must be >= 1");
  }
  const std::size_t width = subset.size();
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }

  ShotHistogram hist;
  hist.subset.assign(subset.begin(), subset.end());
  hist.shots = shots;
  hist.seed = seed;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    hist.counts.emplace(bitstring(i, width), 0);
  }

  // fallback cell for u beyond the rounded total: the last possible outcome
  std::size_t last_nonzero = probs.size() - 1;
  for (std::size_t i = probs.size(); i-- > 0;) {
    if (probs[i] > 0.0) {
      last_nonzero = i;
      break;
    }
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    // 53-bit uniform in [0,1); fixed so histograms are reproducible
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    std::size_t pick = last_nonzero;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
      if (u < cdf[i]) {
        pick = i;
        break;
      }
    }
    ++hist.counts[bitstring(pick, width)];
  }
  return hist;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

}  // namespace

std::vector<double> marginal_probabilities(const StateVector& psi,
                                           std::span<const int> subset) {
  const auto bits = subset_bits(psi.n_qubits, subset);
  std::vector<double> probs(std::size_t{1} << subset.size(), 0.0);
  for (Eigen::Index i = 0; i < psi.amplitudes.size(); ++i) {
    probs[marginal_index(static_cast<std::size_t>(i), bits)] +=
        std::norm(psi.amplitudes(i));
  }
  return probs;
}

std::vector<double> marginal_probabilities(const DensityMatrix& rho,
                                           std::span<const int> subset) {
  const auto bits = subset_bits(rho.n_qubits, subset);
  std::vector<double> probs(std::size_t{1} << subset.size(), 0.0);
  for (Eigen::Index i = 0; i < rho.elements.rows(); ++i) {
    probs[marginal_index(static_cast<std::size_t>(i), bits)] +=
        rho.elements(i, i).real();
  }
  return probs;
}

std::vector<double> marginal_probabilities(const StateVector& psi,
                                           std::initializer_list<int> subset) {
  return marginal_probabilities(psi, std::span<const int>(subset.begin(), subset.size()));
}

std::vector<double> marginal_probabilities(const DensityMatrix& rho,
                                           std::initializer_list<int> subset) {
  return marginal_probabilities(rho, std::span<const int>(subset.begin(), subset.size()));
}

ShotHistogram sample(const StateVector& psi, std::span<const int> subset,
                     std::uint64_t shots, std::uint64_t seed) {
  return sample_distribution(marginal_probabilities(psi, subset), subset, shots, seed);
}

ShotHistogram sample(const DensityMatrix& rho, std::span<const int> subset,
                     std::uint64_t shots, std::uint64_t seed) {
  return sample_distribution(marginal_probabilities(rho, subset), subset, shots, seed);
}

ShotHistogram sample(const StateVector& psi, std::initializer_list<int> subset,
                     std::uint64_t shots, std::uint64_t seed) {
  return sample(psi, std::span<const int>(subset.begin(), subset.size()), shots, seed);
}

ShotHistogram sample(const DensityMatrix& rho, std::initializer_list<int> subset,
                     std::uint64_t shots, std::uint64_t seed) {
  return sample(rho, std::span<const int>(subset.begin(), subset.size()), shots, seed);
}

std::vector<double> frequencies(const ShotHistogram& hist) {
  if (hist.shots == 0) {
    throw std::invalid_argument("frequencies: histogram has zero shots");
  }
  const std::size_t width = hist.subset.size();
  std::vector<double> freq(std::size_t{1} << width, 0.0);
  for (const auto& [key, count] : hist.counts) {
    if (key.size() != width) {
      throw std::invalid_argument("frequencies: bitstring '" + key +
                                  "' does not match subset width");
    }
    std::size_t index = 0;
    for (char ch : key) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("frequencies: bitstring '" + key +
                                    "' is not binary");
      }
      index = (index << 1) | static_cast<std::size_t>(ch == '1');
    }
    freq[index] += static_cast<double>(count) / static_cast<double>(hist.shots);
  }
  return freq;
}

IntensityRecord estimate_pure_intensities(double a1, double a2, double tau,
                                          IntensitySource source) {
  if (!(a1 >= 0.0) || !(a2 >= 0.0) || a1 + a2 > 1.0 + 1e-9) {
    throw std::invalid_argument(
        "estimate_pure_intensities: probabilities out of range");
  }
  const double j0 = (2.0 * a1 - 1.0) * (2.0 * a1 - 1.0);
  const double j2 = 2.0 * a1 * a2;
  return {tau, j0, j2, j2, source};
}

IntensityRecord estimate_thermal_intensities(const std::array<double, 4>& probs,
                                             double tau, double beta,
                                             IntensitySource source) {
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument(
          "estimate_thermal_intensities: negative probability");
    }
  }
  const double j0 = std::cos(tau) * (probs[0] - probs[3]);
  const double j2 = 0.5 * (std::tanh(beta / 2.0) - j0);
  return {tau, j0, j2, j2, source};
}

IntensityRecord estimate_thermal_intensities(const ShotHistogram& hist,
                                             double tau, double beta) {
  if (hist.subset != std::vector<int>{2, 3}) {
    throw std::invalid_argument(
        "estimate_thermal_intensities: histogram must cover exactly the dimer "
        "qubits {2,3}");
  }
  const std::vector<double> f = frequencies(hist);
  return estimate_thermal_intensities({f[0], f[1], f[2], f[3]}, tau, beta,
                                      IntensitySource::Sampled);
}

DensityMatrix apply_depolarizing(const DensityMatrix& rho,
                                 std::span<const int> acted_qubits, double p) {
  check_probability(p, "apply_depolarizing: p");
  const auto bits = subset_bits(rho.n_qubits, acted_qubits);
  const std::size_t dim = dimension(rho.n_qubits);
  const std::size_t k = bits.size();
  const std::size_t mixed_dim = std::size_t{1} << k;

  std::size_t mask = 0;
  for (std::size_t b : bits) mask |= std::size_t{1} << b;

  DensityMatrix out{rho.n_qubits, (1.0 - p) * rho.elements};
  if (p == 0.0) return out;

  // the mixed part: delta on the acted bits times the traced remainder
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & mask) != (j & mask)) continue;
      Complex traced = 0.0;
      for (std::size_t t = 0; t < mixed_dim; ++t) {
        std::size_t tb = 0;
        for (std::size_t bi = 0; bi < k; ++bi) {
          if ((t >> bi) & 1u) tb |= std::size_t{1} << bits[bi];
        }
        traced += rho.elements(static_cast<Eigen::Index>((i & ~mask) | tb),
                               static_cast<Eigen::Index>((j & ~mask) | tb));
      }
      out.elements(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
          p * traced / static_cast<double>(mixed_dim);
    }
  }
  return out;
}

DensityMatrix apply_depolarizing(const DensityMatrix& rho,
                                 std::initializer_list<int> acted_qubits,
                                 double p) {
  return apply_depolarizing(
      rho, std::span<const int>(acted_qubits.begin(), acted_qubits.size()), p);
}

DensityMatrix run_with_noise(const Circuit& c, const NoiseModel& noise) {
  check_probability(noise.p_depolarizing, "NoiseModel: p_depolarizing");
  validate_circuit(c);
  DensityMatrix rho = density_from_pure(ground_state(c.n_qubits));
  for (const Gate& g : c.gates) {
    const Eigen::MatrixXcd u = embed_gate(g, c.n_qubits);
    rho.elements = u * rho.elements * u.adjoint();
    if (noise.p_depolarizing > 0.0) {
      const auto acted = g.acted_qubits();
      rho = apply_depolarizing(rho, std::span<const int>(acted), noise.p_depolarizing);
    }
  }
  return rho;
}

std::string to_json(const ShotHistogram& hist) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [key, count] : hist.counts) counts[key] = count;
  const nlohmann::json j = {{"shots", hist.shots},
                            {"seed", hist.seed},
                            {"subset", hist.subset},
                            {"counts", counts}};
  return j.dump();
}

ShotHistogram histogram_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ShotHistogram hist;
  hist.shots = j.at("shots").get<std::uint64_t>();
  hist.seed = j.value("seed", std::uint64_t{0});
  hist.subset = j.at("subset").get<std::vector<int>>();
  std::uint64_t total = 0;
  for (const auto& [key, value] : j.at("counts").items()) {
    const auto count = value.get<std::uint64_t>();
    hist.counts[key] = count;
    total += count;
  }
  if (total != hist.shots) {
    throw std::invalid_argument("histogram_from_json: counts do not sum to shots");
  }
  return hist;
}

}  // namespace dimerq
