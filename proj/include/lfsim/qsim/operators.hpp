#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfsim/qsim/state.hpp"

namespace lfsim::qsim {

/// Unitary acting on a subset of register qubits, addressed by label.
/// targets[0] is the most significant bit of the operator's own index space.
struct UnitaryOp {
  Matrix matrix;
  std::vector<std::string> targets;

  /// Throws unless matrix is square of dimension 2^targets.size() and
  /// U^dagger U = I within kTolStructural.
  UnitaryOp(Matrix m, std::vector<std::string> t);

  UnitaryOp adjoint() const;
};

/// CPTP map given by Kraus operators on a subset of register qubits.
struct NoiseChannel {
  std::vector<Matrix> kraus_operators;
  std::vector<std::string> targets;

  /// Throws unless sum K^dagger K = I within kTolStructural.
  NoiseChannel(std::vector<Matrix> kraus, std::vector<std::string> t);
};

// Fixed single-qubit matrices.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();

/// Basis-change unitary whose columns are the eigenvectors of
/// cos(theta) Z + sin(theta) X, +1 eigenvector first. theta=0 is the
/// computational (Z) basis, theta=pi/2 the X basis.
Matrix bloch_basis(double theta);

/// CNOT with targets {control, target}.
UnitaryOp cnot(const std::string& control, const std::string& target);

/// Haar-ish random unitary of the given dimension (QR of a Gaussian matrix,
/// phases fixed), deterministic in the seed.
Matrix random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Depolarizing channel on k = targets.size() qubits (k in {1,2}):
/// rho -> (1-p) rho + p (I/2^k) (x) Tr_targets(rho), realized as a Kraus set
/// of uniformly weighted nonidentity Pauli strings.
NoiseChannel depolarizing_channel(double p, std::vector<std::string> targets);

}  // namespace lfsim::qsim
