#pragma once

#include <initializer_list>
#include <map>
#include <span>

#include "dimerq/linalg.hpp"

namespace dimerq {

// Pure state of an n-qubit register as 2^n complex amplitudes.
//
// Conventions used throughout the library:
//   * qubit indices are 1-based; qubit 1 is the most significant bit of a
//     basis index (see qubit_bit in linalg.hpp);
//   * |0> is spin up, so basis index k has collective I_z eigenvalue
//     (n_qubits - 2*popcount(k)) / 2 and |00...0> is the ground state in
//     the field;
//   * states are values: every operation returns a new object and never
//     mutates its input, so instances can be shared freely across threads.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

struct DensityMatrix {
  int n_qubits = 0;
  Eigen::MatrixXcd elements;
};

// Diagonal of the collective spin projection I_z = sum_j I_jz (hbar = 1).
struct CollectiveSpinZ {
  int n_qubits = 0;
  Eigen::VectorXd weights;
};

// Split of a matrix into coherence-order blocks. The order of an element
// <r|M|c> is m_r - m_c, the difference of the row and column I_z
// eigenvalues (sign fixed: row minus column). Every order in
// [-n_qubits, n_qubits] is present; each block is a full-size matrix that
// holds exactly the elements of its order and zeros elsewhere, so the
// blocks sum back to the input.
struct CoherenceDecomposition {
  int n_qubits = 0;
  std::map<int, Eigen::MatrixXcd> blocks;

  Eigen::MatrixXcd reconstruct() const;
};

// |00...0> on n_qubits qubits. Throws on registers outside [1, 12].
StateVector ground_state(int n_qubits);

// rho_jk = psi_j * conj(psi_k). Requires psi normalized to 1e-12.
DensityMatrix density_from_pure(const StateVector& psi);

// Reduced density matrix over the kept qubits, in the order given: keep[0]
// becomes the most significant bit of the reduced index. Trace-preserving.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

CollectiveSpinZ collective_spin_z(int n_qubits);

CoherenceDecomposition coherence_decompose(const DensityMatrix& rho,
                                           const CollectiveSpinZ& iz);

// Same split for a plain matrix (used for detection operators, which are
// Hermitian but not unit-trace).
std::map<int, Eigen::MatrixXcd> coherence_blocks(const Eigen::MatrixXcd& m,
                                                 const CollectiveSpinZ& iz);

// |sum |a_k|^2 - 1|
double normalization_error(const StateVector& psi);
// max |rho - rho^dagger|
double hermiticity_error(const DensityMatrix& rho);
double min_eigenvalue(const DensityMatrix& rho);

// Throw std::invalid_argument when the stored invariants are violated
// (normalization for states; Hermiticity, unit trace and eigenvalues
// >= -1e-10 for density matrices).
void validate_state(const StateVector& psi);
void validate_density(const DensityMatrix& rho);

}  // namespace dimerq
