#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lfsim/ewfs/behavior.hpp"
#include "lfsim/qsim/operators.hpp"
#include "lfsim/qsim/ops.hpp"
#include "lfsim/qsim/state.hpp"

namespace lfsim::ewfs {

/// Where depolarizing noise is inserted into a run.
enum class NoisePoint {
  kNone,
  kInitialState,    // two-qubit depolarizing on (Q_A, Q_B) before anything else
  kFriendBetween,   // on the friend register between the forward and inverse
                    // evolutions of the x=2 branch
};

/// Register labels used throughout: "QA", "F0".."F{n-1}", "m", "QB", and
/// optionally "flag".
struct ScenarioConfig {
  // State of (Q_A, Q_B); defaults to |Phi+>.
  qsim::Vector initial_two_qubit_state;
  int n_friend_qubits = 1;
  // Fixed "thinking" unitary on the friend register; nullopt = no scrambling.
  std::optional<std::uint64_t> scramble_seed;
  // Bloch angles in the X-Z plane (0 = Z basis, pi/2 = X basis).
  double alice_x2_angle;
  double bob_angles[2];
  NoisePoint noise_point = NoisePoint::kNone;
  double depolarizing_p = 0.0;
  // Fraction of Monte Carlo trials discarded as friend pull-outs.
  double pullout_fraction = 0.0;

  /// |Phi+>, A2 = X, Bob at +-pi/4: the canonical maximal-violation settings.
  static ScenarioConfig tsirelson_defaults();
};

/// The friend's observation unitary U-hat on (Q_A, F_A, m): a controlled
/// fan-out from Q_A to every friend qubit and to the message qubit, followed
/// by the fixed scrambling unitary on the friend register.
qsim::UnitaryOp build_friend_unitary(const ScenarioConfig& config);

/// Joint distribution over (a,b), indexed a*2+b with 0 = +1.
/// x=1: run U-hat and read the message in the logical basis.
/// x=2: run U-hat then its inverse, and measure Q_A at alice_x2_angle.
/// Bob measures Q_B at bob_angles[y-1] either way.
Eigen::Vector4d run_branch(const ScenarioConfig& config, int x, int y);

/// Assembles run_branch over all four setting pairs.
Behavior behavior(const ScenarioConfig& config);

struct NoiseSweepRow {
  double p_dep;
  double chsh;       // max over the 8 variants
  bool lf_feasible;
};

/// Behavior under two-qubit depolarizing on the initial state for each grid
/// value, with the CHSH maximum and the LF-model verdict.
std::vector<NoiseSweepRow> noise_sweep(const ScenarioConfig& config,
                                       const std::vector<double>& p_grid);

/// Smallest p_dep with chsh_max <= 2, located by bisection of the noise model
/// used in noise_sweep. Ideal settings give 1 - 1/sqrt(2).
double chsh_crossing_noise(const ScenarioConfig& config, double tol = 1e-9);

enum class FlagMode {
  kIndependent,     // flag unitary acts on the flag alone
  kValueDependent,  // flag is CNOT-copied from Q_A (a which-path record)
};

struct DeutschFlagResult {
  double flag_knew_probability;  // P(flag reads "knew") after the x=2 run
  double restoration_fidelity;   // of everything but the flag vs the input
  double chsh;                   // max over the 8 variants
};

/// Appendix-style flag register demonstration on the x=2 branch.
DeutschFlagResult deutsch_flag_demo(const ScenarioConfig& config,
                                    FlagMode mode);

}  // namespace lfsim::ewfs
