#include "lfsim/qsim/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lfsim/tolerances.hpp"

namespace lfsim::qsim {

namespace {

// Bit numbers (lsb = 0) of the op's targets within the register, msb-first in
// the op's own index space.
std::vector<int> target_bits(const QuantumState& state,
                             const std::vector<std::string>& targets) {
  const int n = state.num_qubits();
  std::vector<int> bits;
  bits.reserve(targets.size());
  for (const std::string& t : targets) bits.push_back(n - 1 - state.position(t));
  return bits;
}

// y = (M embedded on tbits) x, for an arbitrary 2^k x 2^k matrix M.
Vector apply_on_bits(const Vector& v, const Matrix& m,
                     const std::vector<int>& tbits) {
  const int k = static_cast<int>(tbits.size());
  const Eigen::Index sub_dim = Eigen::Index(1) << k;
  const int n = static_cast<int>(std::round(std::log2(double(v.size()))));
  std::vector<int> rest;
  for (int b = 0; b < n; ++b)
    if (std::find(tbits.begin(), tbits.end(), b) == tbits.end())
      rest.push_back(b);

  Vector out(v.size());
  Vector sub(sub_dim);
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(sub_dim));
  for (Eigen::Index key = 0; key < sub_dim; ++key) {
    std::uint64_t off = 0;
    for (int i = 0; i < k; ++i)
      if ((key >> (k - 1 - i)) & 1) off |= std::uint64_t(1) << tbits[std::size_t(i)];
    offsets[std::size_t(key)] = off;
  }
  const Eigen::Index rest_count = Eigen::Index(1) << rest.size();
  for (Eigen::Index r = 0; r < rest_count; ++r) {
    std::uint64_t base = 0;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if ((r >> i) & 1) base |= std::uint64_t(1) << rest[i];
    for (Eigen::Index key = 0; key < sub_dim; ++key)
      sub(key) = v(Eigen::Index(base | offsets[std::size_t(key)]));
    Vector subo = m * sub;
    for (Eigen::Index key = 0; key < sub_dim; ++key)
      out(Eigen::Index(base | offsets[std::size_t(key)])) = subo(key);
  }
  return out;
}

// M rho M^dagger with M embedded on tbits.
Matrix conjugate_on_bits(const Matrix& rho, const Matrix& m,
                         const std::vector<int>& tbits) {
  Matrix a(rho.rows(), rho.cols());
  for (Eigen::Index j = 0; j < rho.cols(); ++j)
    a.col(j) = apply_on_bits(rho.col(j), m, tbits);
  Matrix ad = a.adjoint();
  Matrix b(rho.rows(), rho.cols());
  for (Eigen::Index j = 0; j < rho.cols(); ++j)
    b.col(j) = apply_on_bits(ad.col(j), m, tbits);
  return b.adjoint();
}

std::uint64_t extract_bits(std::uint64_t idx, const std::vector<int>& bits) {
  std::uint64_t key = 0;
  const std::size_t k = bits.size();
  for (std::size_t i = 0; i < k; ++i)
    if ((idx >> bits[i]) & 1) key |= std::uint64_t(1) << (k - 1 - i);
  return key;
}

}  // namespace

QuantumState apply_unitary(const QuantumState& state, const UnitaryOp& op) {
  const std::vector<int> tbits = target_bits(state, op.targets);
  if (state.is_pure())
    return QuantumState::pure(apply_on_bits(state.amplitudes(), op.matrix, tbits),
                              state.labels());
  return QuantumState::mixed(conjugate_on_bits(state.density(), op.matrix, tbits),
                             state.labels());
}

QuantumState apply_channel(const QuantumState& state, const NoiseChannel& ch) {
  const QuantumState rho_in = state.promoted();
  const std::vector<int> tbits = target_bits(rho_in, ch.targets);
  Matrix out = Matrix::Zero(rho_in.dim(), rho_in.dim());
  for (const Matrix& k : ch.kraus_operators)
    out += conjugate_on_bits(rho_in.density(), k, tbits);
  return QuantumState::mixed(std::move(out), rho_in.labels());
}

MeasurementResult measure(const QuantumState& state, const UnitaryOp& basis) {
  const std::vector<int> tbits = target_bits(state, basis.targets);
  const std::size_t k = basis.targets.size();
  const Eigen::Index outcomes = Eigen::Index(1) << k;
  const UnitaryOp rot(basis.matrix.adjoint(), basis.targets);
  const UnitaryOp unrot = basis;

  MeasurementResult res;
  res.distribution = Eigen::VectorXd::Zero(outcomes);

  if (state.is_pure()) {
    const Vector v = apply_on_bits(state.amplitudes(), rot.matrix, tbits);
    std::vector<Vector> projected(std::size_t(outcomes),
                                  Vector::Zero(v.size()));
    for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
      const std::uint64_t key = extract_bits(std::uint64_t(idx), tbits);
      projected[key](idx) = v(idx);
      res.distribution(Eigen::Index(key)) += std::norm(v(idx));
    }
    for (Eigen::Index j = 0; j < outcomes; ++j) {
      const double p = res.distribution(j);
      if (p > kTolArithmetic) {
        Vector post = projected[std::size_t(j)] / std::sqrt(p);
        res.post_states.push_back(QuantumState::pure(
            apply_on_bits(post, unrot.matrix, tbits), state.labels()));
      } else {
        res.post_states.push_back(state);
      }
    }
  } else {
    const Matrix rho = conjugate_on_bits(state.density(), rot.matrix, tbits);
    for (Eigen::Index j = 0; j < outcomes; ++j) {
      Matrix block = Matrix::Zero(rho.rows(), rho.cols());
      double p = 0.0;
      for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        if (extract_bits(std::uint64_t(r), tbits) != std::uint64_t(j)) continue;
        p += rho(r, r).real();
        for (Eigen::Index c = 0; c < rho.cols(); ++c)
          if (extract_bits(std::uint64_t(c), tbits) == std::uint64_t(j))
            block(r, c) = rho(r, c);
      }
      res.distribution(j) = p;
      if (p > kTolArithmetic) {
        res.post_states.push_back(QuantumState::mixed(
            conjugate_on_bits(block / p, unrot.matrix, tbits), state.labels()));
      } else {
        res.post_states.push_back(state);
      }
    }
  }
  return res;
}

Eigen::VectorXd joint_distribution(
    const QuantumState& state,
    const std::vector<std::pair<std::string, Matrix>>& settings) {
  QuantumState rotated = state;
  std::vector<int> bits;
  for (const auto& [label, basis] : settings) {
    rotated = apply_unitary(rotated, UnitaryOp(basis.adjoint(), {label}));
    bits.push_back(rotated.num_qubits() - 1 - rotated.position(label));
  }
  const std::size_t k = settings.size();
  Eigen::VectorXd dist = Eigen::VectorXd::Zero(Eigen::Index(1) << k);
  if (rotated.is_pure()) {
    const Vector& v = rotated.amplitudes();
    for (Eigen::Index idx = 0; idx < v.size(); ++idx)
      dist(Eigen::Index(extract_bits(std::uint64_t(idx), bits))) +=
          std::norm(v(idx));
  } else {
    const Matrix& rho = rotated.density();
    for (Eigen::Index idx = 0; idx < rho.rows(); ++idx)
      dist(Eigen::Index(extract_bits(std::uint64_t(idx), bits))) +=
          rho(idx, idx).real();
  }
  return dist;
}

double fidelity(const QuantumState& s1, const QuantumState& s2) {
  if (s1.dim() != s2.dim() || s1.labels() != s2.labels())
    throw std::invalid_argument("fidelity: register mismatch");
  double f;
  if (s1.is_pure() && s2.is_pure()) {
    f = std::norm(s1.amplitudes().dot(s2.amplitudes()));
  } else if (s1.is_pure()) {
    f = (s1.amplitudes().adjoint() * s2.density() * s1.amplitudes())(0).real();
  } else if (s2.is_pure()) {
    f = (s2.amplitudes().adjoint() * s1.density() * s2.amplitudes())(0).real();
  } else {
    // Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
    Eigen::SelfAdjointEigenSolver<Matrix> es1(s1.density());
    Matrix sqrt_rho = Matrix::Zero(s1.dim(), s1.dim());
    for (Eigen::Index i = 0; i < s1.dim(); ++i) {
      const double ev = std::max(0.0, es1.eigenvalues()(i));
      sqrt_rho += std::sqrt(ev) * es1.eigenvectors().col(i) *
                  es1.eigenvectors().col(i).adjoint();
    }
    Matrix inner = sqrt_rho * s2.density() * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<Matrix> es2(0.5 * (inner + inner.adjoint()));
    double tr = 0.0;
    for (Eigen::Index i = 0; i < s1.dim(); ++i)
      tr += std::sqrt(std::max(0.0, es2.eigenvalues()(i)));
    f = tr * tr;
  }
  return std::clamp(f, 0.0, 1.0);
}

QuantumState partial_trace(const QuantumState& state,
                           const std::vector<std::string>& keep_labels) {
  if (keep_labels.empty())
    throw std::invalid_argument("partial_trace: empty keep set");
  for (const std::string& l : keep_labels) (void)state.position(l);
  // Keep register order regardless of the order given.
  std::vector<std::string> kept;
  for (const std::string& l : state.labels())
    if (std::find(keep_labels.begin(), keep_labels.end(), l) != keep_labels.end())
      kept.push_back(l);
  if (kept.size() != keep_labels.size())
    throw std::invalid_argument("partial_trace: duplicate keep label");
  if (kept.size() == state.labels().size()) return state;

  const int n = state.num_qubits();
  std::vector<int> keep_bits;  // msb-first in the reduced index space
  for (const std::string& l : kept) keep_bits.push_back(n - 1 - state.position(l));
  std::vector<int> rest;
  for (int b = n - 1; b >= 0; --b)
    if (std::find(keep_bits.begin(), keep_bits.end(), b) == keep_bits.end())
      rest.push_back(b);

  const Eigen::Index kd = Eigen::Index(1) << kept.size();
  const Eigen::Index rd = Eigen::Index(1) << rest.size();
  auto expand = [](std::uint64_t key, const std::vector<int>& bits) {
    std::uint64_t idx = 0;
    const std::size_t k = bits.size();
    for (std::size_t i = 0; i < k; ++i)
      if ((key >> (k - 1 - i)) & 1) idx |= std::uint64_t(1) << bits[i];
    return idx;
  };

  Matrix out = Matrix::Zero(kd, kd);
  for (Eigen::Index i = 0; i < kd; ++i) {
    const std::uint64_t bi = expand(std::uint64_t(i), keep_bits);
    for (Eigen::Index j = 0; j < kd; ++j) {
      const std::uint64_t bj = expand(std::uint64_t(j), keep_bits);
      Complex sum = 0.0;
      for (Eigen::Index r = 0; r < rd; ++r) {
        const std::uint64_t br = expand(std::uint64_t(r), rest);
        const Eigen::Index row = Eigen::Index(bi | br);
        const Eigen::Index col = Eigen::Index(bj | br);
        if (state.is_pure())
          sum += state.amplitudes()(row) * std::conj(state.amplitudes()(col));
        else
          sum += state.density()(row, col);
      }
      out(i, j) = sum;
    }
  }
  return QuantumState::mixed(std::move(out), kept);
}

}  // namespace lfsim::qsim
