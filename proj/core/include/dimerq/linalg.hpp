#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace dimerq {

using Complex = std::complex<double>;

// Dense-representation guard: the largest register is 12 qubits (4096-dim).
inline constexpr int kMaxQubits = 12;

// 2^n_qubits, rejecting registers outside [1, kMaxQubits].
std::size_t dimension(int n_qubits);

// Qubit indices are 1-based and qubit 1 is the most significant bit of a
// basis index: |q1 q2 ... qn> has index q1*2^(n-1) + ... + qn.
inline std::size_t qubit_bit(int n_qubits, int qubit) {
  return static_cast<std::size_t>(n_qubits - qubit);
}
inline std::size_t qubit_mask(int n_qubits, int qubit) {
  return std::size_t{1} << qubit_bit(n_qubits, qubit);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Largest singular value.
double operator_norm(const Eigen::MatrixXcd& m);

double max_abs(const Eigen::MatrixXcd& m);

// Multiplies by the phase that makes the largest-magnitude amplitude
// real-positive.
Eigen::VectorXcd align_global_phase(const Eigen::VectorXcd& v);

// max-abs difference between a and b after aligning a's global phase to b
// at b's largest-magnitude entry.
double state_distance_up_to_phase(const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b);

// operator-norm distance between a and b after the same phase alignment.
double matrix_distance_up_to_phase(const Eigen::MatrixXcd& a,
                                   const Eigen::MatrixXcd& b);

}  // namespace dimerq
