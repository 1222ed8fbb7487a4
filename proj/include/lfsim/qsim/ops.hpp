#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lfsim/qsim/operators.hpp"
#include "lfsim/qsim/state.hpp"

namespace lfsim::qsim {

/// op embedded on its target qubits; purity is preserved for pure inputs.
QuantumState apply_unitary(const QuantumState& state, const UnitaryOp& op);

/// rho -> sum_K K rho K^dagger. Pure inputs are promoted to mixed mode.
QuantumState apply_channel(const QuantumState& state, const NoiseChannel& ch);

struct MeasurementResult {
  Eigen::VectorXd distribution;           // over 2^k outcomes, msb = targets[0]
  std::vector<QuantumState> post_states;  // normalized; same mode as input
};

/// Projective measurement of basis.targets in the basis whose vectors are the
/// columns of basis.matrix. Outcome index j corresponds to column j.
/// Zero-probability outcomes get an (unnormalized-input) placeholder post
/// state equal to the input.
MeasurementResult measure(const QuantumState& state, const UnitaryOp& basis);

/// Outcome distribution of simultaneously measuring each (label, 2x2 basis)
/// pair; bit i of the outcome index (msb first) is the outcome of pair i.
Eigen::VectorXd joint_distribution(
    const QuantumState& state,
    const std::vector<std::pair<std::string, Matrix>>& settings);

/// |<s1|s2>|^2 for pure states, Uhlmann fidelity otherwise. In [0,1].
double fidelity(const QuantumState& s1, const QuantumState& s2);

/// Reduced state on keep_labels (in register order). Throws on empty keep set.
/// Returns the input unchanged when nothing is traced out.
QuantumState partial_trace(const QuantumState& state,
                           const std::vector<std::string>& keep_labels);

}  // namespace lfsim::qsim
