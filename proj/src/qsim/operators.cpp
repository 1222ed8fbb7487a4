#include "lfsim/qsim/operators.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lfsim/qsim/linalg.hpp"
#include "lfsim/tolerances.hpp"

namespace lfsim::qsim {

namespace {

void check_targets(const std::vector<std::string>& targets, Eigen::Index rows,
                   Eigen::Index cols) {
  if (targets.empty()) throw std::invalid_argument("operator needs targets");
  const Eigen::Index d = Eigen::Index(1) << targets.size();
  if (rows != d || cols != d)
    throw std::invalid_argument("operator dimension does not match targets");
}

}  // namespace

UnitaryOp::UnitaryOp(Matrix m, std::vector<std::string> t)
    : matrix(std::move(m)), targets(std::move(t)) {
  check_targets(targets, matrix.rows(), matrix.cols());
  const Matrix id = Matrix::Identity(matrix.rows(), matrix.cols());
  if ((matrix.adjoint() * matrix - id).cwiseAbs().maxCoeff() > kTolStructural)
    throw std::invalid_argument("matrix is not unitary");
}

UnitaryOp UnitaryOp::adjoint() const {
  return UnitaryOp(matrix.adjoint(), targets);
}

NoiseChannel::NoiseChannel(std::vector<Matrix> kraus,
                           std::vector<std::string> t)
    : kraus_operators(std::move(kraus)), targets(std::move(t)) {
  if (kraus_operators.empty())
    throw std::invalid_argument("channel needs at least one Kraus operator");
  for (const Matrix& k : kraus_operators)
    check_targets(targets, k.rows(), k.cols());
  Matrix sum = Matrix::Zero(kraus_operators[0].rows(), kraus_operators[0].cols());
  for (const Matrix& k : kraus_operators) sum += k.adjoint() * k;
  const Matrix id = Matrix::Identity(sum.rows(), sum.cols());
  if ((sum - id).cwiseAbs().maxCoeff() > kTolStructural)
    throw std::invalid_argument("Kraus operators are not trace preserving");
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Matrix bloch_basis(double theta) {
  // Eigenvectors of cos(theta) Z + sin(theta) X.
  Matrix m(2, 2);
  m << std::cos(theta / 2), -std::sin(theta / 2),  //
      std::sin(theta / 2), std::cos(theta / 2);
  return m;
}

UnitaryOp cnot(const std::string& control, const std::string& target) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return UnitaryOp(std::move(m), {control, target});
}

Matrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the factorization is unique.
  for (Eigen::Index j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

NoiseChannel depolarizing_channel(double p, std::vector<std::string> targets) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing parameter must be in [0,1]");
  const std::size_t k = targets.size();
  if (k != 1 && k != 2)
    throw std::invalid_argument("depolarizing channel supports 1 or 2 qubits");
  const std::array<Matrix, 4> paulis = {Matrix::Identity(2, 2), pauli_x(),
                                        pauli_y(), pauli_z()};
  const double n = std::pow(4.0, double(k));
  std::vector<Matrix> kraus;
  for (std::size_t i = 0; i < (k == 1 ? 4u : 16u); ++i) {
    Matrix op = (k == 1) ? paulis[i] : kron(paulis[i / 4], paulis[i % 4]);
    const double w = (i == 0) ? 1.0 - p + p / n : p / n;
    kraus.push_back(std::sqrt(w) * op);
  }
  return NoiseChannel(std::move(kraus), std::move(targets));
}

}  // namespace lfsim::qsim
