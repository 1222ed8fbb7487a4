#include "lfsim/ewfs/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lfsim/lfpoly/lf.hpp"
#include "lfsim/qsim/linalg.hpp"
#include "lfsim/tolerances.hpp"

namespace lfsim::ewfs {

namespace {

using qsim::Matrix;
using qsim::QuantumState;
using qsim::UnitaryOp;
using qsim::Vector;

std::vector<std::string> friend_labels(int n_friend) {
  std::vector<std::string> l = {"QA"};
  for (int i = 0; i < n_friend; ++i) l.push_back("F" + std::to_string(i));
  l.push_back("m");
  return l;
}

std::vector<std::string> register_labels(const ScenarioConfig& c, bool flag) {
  std::vector<std::string> l = friend_labels(c.n_friend_qubits);
  if (flag) l.push_back("flag");
  l.push_back("QB");
  return l;
}

// psi(QA,QB) on (Q_A, Q_B), everything else |0>. Register order is
// QA, F..., m, [flag], QB, so QA is the msb and QB the lsb.
QuantumState initial_state(const ScenarioConfig& c, bool flag) {
  if (c.initial_two_qubit_state.size() != 4)
    throw std::invalid_argument("initial state must be on two qubits");
  std::vector<std::string> labels = register_labels(c, flag);
  const Eigen::Index dim = Eigen::Index(1) << labels.size();
  Vector v = Vector::Zero(dim);
  for (int qa = 0; qa < 2; ++qa)
    for (int qb = 0; qb < 2; ++qb)
      v((Eigen::Index(qa) << (labels.size() - 1)) | qb) =
          c.initial_two_qubit_state(qa * 2 + qb);
  return QuantumState::pure(std::move(v), std::move(labels));
}

QuantumState maybe_initial_noise(const ScenarioConfig& c, QuantumState s) {
  if (c.noise_point == NoisePoint::kInitialState && c.depolarizing_p > 0.0)
    return qsim::apply_channel(
        s, qsim::depolarizing_channel(c.depolarizing_p, {"QA", "QB"}));
  return s;
}

QuantumState friend_register_noise(const ScenarioConfig& c, QuantumState s) {
  for (int i = 0; i < c.n_friend_qubits; ++i)
    s = qsim::apply_channel(s, qsim::depolarizing_channel(
                                   c.depolarizing_p, {"F" + std::to_string(i)}));
  return s;
}

Eigen::Vector4d distribution_after(const ScenarioConfig& c,
                                   const QuantumState& s, int x, int y) {
  const Matrix bob = qsim::bloch_basis(c.bob_angles[y - 1]);
  if (x == 1)
    return qsim::joint_distribution(s, {{"m", Matrix::Identity(2, 2)},
                                        {"QB", bob}});
  return qsim::joint_distribution(
      s, {{"QA", qsim::bloch_basis(c.alice_x2_angle)}, {"QB", bob}});
}

}  // namespace

ScenarioConfig ScenarioConfig::tsirelson_defaults() {
  ScenarioConfig c;
  c.initial_two_qubit_state = Vector::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  c.initial_two_qubit_state(0) = s;  // |00>
  c.initial_two_qubit_state(3) = s;  // |11>
  c.n_friend_qubits = 1;
  c.alice_x2_angle = std::numbers::pi / 2;
  c.bob_angles[0] = std::numbers::pi / 4;
  c.bob_angles[1] = -std::numbers::pi / 4;
  return c;
}

UnitaryOp build_friend_unitary(const ScenarioConfig& config) {
  const int nf = config.n_friend_qubits;
  if (nf < 1) throw std::invalid_argument("need at least one friend qubit");
  const std::vector<std::string> targets = friend_labels(nf);
  const int nbits = nf + 2;
  const Eigen::Index dim = Eigen::Index(1) << nbits;

  // Fan-out: |q, f, m> -> |q, f ^ q..q, m ^ q>. A permutation matrix.
  Matrix fanout = Matrix::Zero(dim, dim);
  const std::uint64_t low_mask = (std::uint64_t(1) << (nbits - 1)) - 1;
  for (Eigen::Index in = 0; in < dim; ++in) {
    std::uint64_t idx = std::uint64_t(in);
    if (idx >> (nbits - 1)) idx ^= low_mask;  // flip friend + message bits
    fanout(Eigen::Index(idx), in) = 1.0;
  }

  if (!config.scramble_seed) return UnitaryOp(std::move(fanout), targets);

  const Matrix v = qsim::random_unitary(Eigen::Index(1) << nf,
                                        *config.scramble_seed);
  const Matrix scramble =
      qsim::kron(qsim::kron(Matrix::Identity(2, 2), v), Matrix::Identity(2, 2));
  return UnitaryOp(scramble * fanout, targets);
}

Eigen::Vector4d run_branch(const ScenarioConfig& config, int x, int y) {
  if ((x != 1 && x != 2) || (y != 1 && y != 2))
    throw std::invalid_argument("settings must be in {1,2}");
  QuantumState s = maybe_initial_noise(config, initial_state(config, false));
  const UnitaryOp u_hat = build_friend_unitary(config);
  s = qsim::apply_unitary(s, u_hat);
  if (x == 2) {
    if (config.noise_point == NoisePoint::kFriendBetween &&
        config.depolarizing_p > 0.0)
      s = friend_register_noise(config, s);
    s = qsim::apply_unitary(s, u_hat.adjoint());
  }
  Eigen::Vector4d dist = distribution_after(config, s, x, y);
  return dist / dist.sum();
}

Behavior behavior(const ScenarioConfig& config) {
  Behavior bh;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) {
      const Eigen::Vector4d d = run_branch(config, x, y);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) bh.at(x - 1, y - 1, a, b) = d(a * 2 + b);
    }
  return bh;
}

std::vector<NoiseSweepRow> noise_sweep(const ScenarioConfig& config,
                                       const std::vector<double>& p_grid) {
  std::vector<NoiseSweepRow> rows;
  for (double p : p_grid) {
    if (p < 0.0 || p > 1.0)
      throw std::invalid_argument("noise grid values must be in [0,1]");
    ScenarioConfig c = config;
    c.noise_point = NoisePoint::kInitialState;
    c.depolarizing_p = p;
    const Behavior bh = behavior(c);
    rows.push_back({p, chsh_max(bh), lfpoly::lf_feasible(bh).feasible});
  }
  return rows;
}

double chsh_crossing_noise(const ScenarioConfig& config, double tol) {
  auto excess = [&](double p) {
    ScenarioConfig c = config;
    c.noise_point = NoisePoint::kInitialState;
    c.depolarizing_p = p;
    return chsh_max(behavior(c)) - 2.0;
  };
  double lo = 0.0, hi = 1.0;
  if (excess(lo) <= 0.0) return 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DeutschFlagResult deutsch_flag_demo(const ScenarioConfig& config,
                                    FlagMode mode) {
  const UnitaryOp u_hat = build_friend_unitary(config);
  const UnitaryOp flag_op =
      mode == FlagMode::kIndependent
          ? UnitaryOp(qsim::pauli_x(), {"flag"})  // |blank> -> |knew>
          : qsim::cnot("QA", "flag");

  auto after_reversal = [&](const QuantumState& in) {
    QuantumState s = qsim::apply_unitary(in, u_hat);
    s = qsim::apply_unitary(s, flag_op);
    return qsim::apply_unitary(s, u_hat.adjoint());
  };

  const QuantumState init = initial_state(config, true);
  const QuantumState reversed = after_reversal(init);

  DeutschFlagResult res;
  const auto flag_dist = qsim::measure(
      reversed, UnitaryOp(Matrix::Identity(2, 2), {"flag"})).distribution;
  res.flag_knew_probability = flag_dist(1);

  std::vector<std::string> keep = register_labels(config, false);
  res.restoration_fidelity =
      qsim::fidelity(initial_state(config, false),
                     qsim::partial_trace(reversed, keep));

  Behavior bh;
  for (int x = 1; x <= 2; ++x)
    for (int y = 1; y <= 2; ++y) {
      QuantumState s = qsim::apply_unitary(init, u_hat);
      s = qsim::apply_unitary(s, flag_op);
      if (x == 2) s = qsim::apply_unitary(s, u_hat.adjoint());
      Eigen::Vector4d d = distribution_after(config, s, x, y);
      d /= d.sum();
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) bh.at(x - 1, y - 1, a, b) = d(a * 2 + b);
    }
  res.chsh = chsh_max(bh);
  return res;
}

}  // namespace lfsim::ewfs
