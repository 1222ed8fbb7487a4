#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lfsim::qsim {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Dense state of an ordered register of named qubits.
///
/// The register labels define the tensor order: labels[0] is the leftmost
/// factor and therefore the most significant bit of a basis index. A state is
/// either pure (statevector of length 2^n) or mixed (density matrix 2^n x 2^n).
class QuantumState {
 public:
  /// Normalized statevector. Throws if the norm deviates from 1 beyond
  /// kTolArithmetic or the dimension is not 2^labels.size().
  static QuantumState pure(Vector amplitudes, std::vector<std::string> labels);

  /// Density operator. Throws unless trace==1, Hermitian, and eigenvalues
  /// >= -kTolStructural.
  static QuantumState mixed(Matrix rho, std::vector<std::string> labels);

  /// Computational basis state |bits>, where bit i of `bits` (counted from the
  /// most significant end of the register) belongs to labels[i].
  static QuantumState basis(std::vector<std::string> labels,
                            std::uint64_t bits = 0);

  bool is_pure() const { return pure_; }
  int num_qubits() const { return static_cast<int>(labels_.size()); }
  Eigen::Index dim() const { return dim_; }

  const Vector& amplitudes() const;
  const Matrix& density() const;

  /// Density operator regardless of mode.
  Matrix as_density() const;

  /// Mixed-mode copy of this state.
  QuantumState promoted() const;

  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of `label` in the register; throws if absent.
  int position(const std::string& label) const;
  bool has_label(const std::string& label) const;

 private:
  QuantumState() = default;

  bool pure_ = true;
  Eigen::Index dim_ = 0;
  Vector amplitudes_;
  Matrix rho_;
  std::vector<std::string> labels_;
};

}  // namespace lfsim::qsim
