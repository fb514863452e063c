#include "dimerq/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerq {

namespace {

constexpr double kAlgebraTol = 1e-12;
constexpr double kPsdFloor = -1e-10;

void check_register_match(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": register sizes differ (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

Eigen::MatrixXcd CoherenceDecomposition::reconstruct() const {
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [order, block] : blocks) sum += block;
  return sum;
}

StateVector ground_state(int n_qubits) {
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  StateVector psi{n_qubits, Eigen::VectorXcd::Zero(dim)};
  psi.amplitudes(0) = 1.0;
  return psi;
}

DensityMatrix density_from_pure(const StateVector& psi) {
  validate_state(psi);
  return {psi.n_qubits, psi.amplitudes * psi.amplitudes.adjoint()};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits;
  const std::size_t dim = dimension(n);
  if (rho.elements.rows() != static_cast<Eigen::Index>(dim) ||
      rho.elements.cols() != static_cast<Eigen::Index>(dim)) {
    throw std::invalid_argument("partial_trace: matrix size does not match n_qubits");
  }
  if (keep.empty() || keep.size() > static_cast<std::size_t>(n)) {
    throw std::invalid_argument("partial_trace: kept-qubit list size invalid");
  }

  std::vector<bool> kept(static_cast<std::size_t>(n) + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n) {
      throw std::invalid_argument("partial_trace: qubit index " +
                                  std::to_string(q) + " out of range");
    }
    if (kept[static_cast<std::size_t>(q)]) {
      throw std::invalid_argument("partial_trace: duplicate qubit index " +
                                  std::to_string(q));
    }
    kept[static_cast<std::size_t>(q)] = true;
  }

  const int k = static_cast<int>(keep.size());
  // bit position in the full index of each kept qubit, in the caller's
  // order (keep[0] becomes the MSB of the reduced index), and of each
  // traced qubit.
  std::vector<std::size_t> keep_bit(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) keep_bit[j] = qubit_bit(n, keep[j]);
  std::vector<std::size_t> traced_bit;
  for (int q = 1; q <= n; ++q) {
    if (!kept[static_cast<std::size_t>(q)]) traced_bit.push_back(qubit_bit(n, q));
  }

  const std::size_t reduced_dim = std::size_t{1} << k;
  const std::size_t traced_dim = std::size_t{1} << traced_bit.size();

  auto full_index = [&](std::size_t reduced, std::size_t traced) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < keep_bit.size(); ++j) {
      if ((reduced >> (keep_bit.size() - 1 - j)) & 1u) idx |= std::size_t{1} << keep_bit[j];
    }
    for (std::size_t j = 0; j < traced_bit.size(); ++j) {
      if ((traced >> j) & 1u) idx |= std::size_t{1} << traced_bit[j];
    }
    return static_cast<Eigen::Index>(idx);
  };

  DensityMatrix out{k, Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(reduced_dim),
                                              static_cast<Eigen::Index>(reduced_dim))};
  for (std::size_t r = 0; r < reduced_dim; ++r) {
    for (std::size_t c = 0; c < reduced_dim; ++c) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        sum += rho.elements(full_index(r, t), full_index(c, t));
      }
      out.elements(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sum;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

CollectiveSpinZ collective_spin_z(int n_qubits) {
  const auto dim = static_cast<Eigen::Index>(dimension(n_qubits));
  CollectiveSpinZ iz{n_qubits, Eigen::VectorXd(dim)};
  for (Eigen::Index k = 0; k < dim; ++k) {
    const int ones = std::popcount(static_cast<std::size_t>(k));
    iz.weights(k) = 0.5 * (n_qubits - 2 * ones);
  }
  return iz;
}

std::map<int, Eigen::MatrixXcd> coherence_blocks(const Eigen::MatrixXcd& m,
                                                 const CollectiveSpinZ& iz) {
  const auto dim = static_cast<Eigen::Index>(dimension(iz.n_qubits));
  if (m.rows() != dim || m.cols() != dim || iz.weights.size() != dim) {
    throw std::invalid_argument("coherence_blocks: dimension mismatch");
  }
  std::map<int, Eigen::MatrixXcd> blocks;
  for (int order = -iz.n_qubits; order <= iz.n_qubits; ++order) {
    blocks.emplace(order, Eigen::MatrixXcd::Zero(dim, dim));
  }
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      // weights are exact multiples of 1/2, so the difference is an exact
      // integer
      const int order = static_cast<int>(std::lround(iz.weights(r) - iz.weights(c)));
      blocks.at(order)(r, c) = m(r, c);
    }
  }
  return blocks;
}

CoherenceDecomposition coherence_decompose(const DensityMatrix& rho,
                                           const CollectiveSpinZ& iz) {
  check_register_match(rho.n_qubits, iz.n_qubits, "coherence_decompose");
  return {rho.n_qubits, coherence_blocks(rho.elements, iz)};
}

double normalization_error(const StateVector& psi) {
  return std::abs(psi.amplitudes.squaredNorm() - 1.0);
}

double hermiticity_error(const DensityMatrix& rho) {
  return max_abs(rho.elements - rho.elements.adjoint());
}

double min_eigenvalue(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.elements);
  return solver.eigenvalues().minCoeff();
}

void validate_state(const StateVector& psi) {
  const auto dim = static_cast<Eigen::Index>(dimension(psi.n_qubits));
  if (psi.amplitudes.size() != dim) {
    throw std::invalid_argument("StateVector: amplitude array length is not 2^n_qubits");
  }
  if (normalization_error(psi) > kAlgebraTol) {
    throw std::invalid_argument("StateVector: not normalized");
  }
}

void validate_density(const DensityMatrix& rho) {
  const auto dim = static_cast<Eigen::Index>(dimension(rho.n_qubits));
  if (rho.elements.rows() != dim || rho.elements.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: matrix is not 2^n x 2^n");
  }
  if (hermiticity_error(rho) > kAlgebraTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(rho.elements.trace().real() - 1.0) > kAlgebraTol ||
      std::abs(rho.elements.trace().imag()) > kAlgebraTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
  if (min_eigenvalue(rho) < kPsdFloor) {
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }
}

}  // namespace dimerq
