#include "lfsim/qsim/state.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lfsim/tolerances.hpp"

namespace lfsim::qsim {

namespace {

Eigen::Index dim_for(const std::vector<std::string>& labels) {
  if (labels.empty()) throw std::invalid_argument("register must be nonempty");
  if (labels.size() > 20)
    throw std::invalid_argument("register too large for dense simulation");
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("duplicate register label");
  return Eigen::Index(1) << labels.size();
}

}  // namespace

QuantumState QuantumState::pure(Vector amplitudes,
                                std::vector<std::string> labels) {
  QuantumState s;
  s.dim_ = dim_for(labels);
  if (amplitudes.size() != s.dim_)
    throw std::invalid_argument("statevector length does not match register");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kTolArithmetic * 100)
    throw std::invalid_argument("statevector is not normalized");
  s.pure_ = true;
  s.amplitudes_ = std::move(amplitudes);
  s.labels_ = std::move(labels);
  return s;
}

QuantumState QuantumState::mixed(Matrix rho, std::vector<std::string> labels) {
  QuantumState s;
  s.dim_ = dim_for(labels);
  if (rho.rows() != s.dim_ || rho.cols() != s.dim_)
    throw std::invalid_argument("density matrix shape does not match register");
  if (std::abs(rho.trace().real() - 1.0) > kTolArithmetic * 100 ||
      std::abs(rho.trace().imag()) > kTolArithmetic * 100)
    throw std::invalid_argument("density matrix trace is not 1");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kTolArithmetic * 100)
    throw std::invalid_argument("density matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kTolStructural)
    throw std::invalid_argument("density matrix is not positive semidefinite");
  s.pure_ = false;
  s.rho_ = std::move(rho);
  s.labels_ = std::move(labels);
  return s;
}

QuantumState QuantumState::basis(std::vector<std::string> labels,
                                 std::uint64_t bits) {
  const Eigen::Index d = dim_for(labels);
  Vector v = Vector::Zero(d);
  if (bits >= std::uint64_t(d))
    throw std::invalid_argument("basis index out of range");
  v(Eigen::Index(bits)) = 1.0;
  return pure(std::move(v), std::move(labels));
}

const Vector& QuantumState::amplitudes() const {
  if (!pure_) throw std::logic_error("amplitudes() on a mixed state");
  return amplitudes_;
}

const Matrix& QuantumState::density() const {
  if (pure_) throw std::logic_error("density() on a pure state");
  return rho_;
}

Matrix QuantumState::as_density() const {
  if (pure_) return amplitudes_ * amplitudes_.adjoint();
  return rho_;
}

QuantumState QuantumState::promoted() const {
  if (!pure_) return *this;
  return mixed(as_density(), labels_);
}

int QuantumState::position(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("no such register label: " + label);
  return static_cast<int>(it - labels_.begin());
}

bool QuantumState::has_label(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

}  // namespace lfsim::qsim
