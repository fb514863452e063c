#include "dimerq/linalg.hpp"

#include <stdexcept>
#include <string>

namespace dimerq {

std::size_t dimension(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(
        "register capacity: n_qubits must lie in [1, " +
        std::to_string(kMaxQubits) + "], got " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double operator_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

Eigen::VectorXcd align_global_phase(const Eigen::VectorXcd& v) {
  Eigen::Index k;
  v.cwiseAbs().maxCoeff(&k);
  const double mag = std::abs(v(k));
  if (mag == 0.0) return v;
  return v * (std::conj(v(k)) / mag);
}

namespace {

// phase that rotates a onto b at b's largest-magnitude entry
Complex relative_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) == 0.0 || std::abs(b(r, c)) == 0.0) return {1.0, 0.0};
  Complex phase = b(r, c) / a(r, c);
  return phase / std::abs(phase);
}

}  // namespace

double state_distance_up_to_phase(const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b) {
  return max_abs(a * relative_phase(a, b) - b);
}

double matrix_distance_up_to_phase(const Eigen::MatrixXcd& a,
                                   const Eigen::MatrixXcd& b) {
  return operator_norm(a * relative_phase(a, b) - b);
}

}  // namespace dimerq
