#include "lfsim/lfpoly/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lfsim::lfpoly {

namespace {
constexpr double kPivotEps = 1e-11;
}

void LinearProgram::validate() const {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  if (a_eq.rows() != b_eq.size() || (a_eq.rows() > 0 && a_eq.cols() != num_vars))
    throw std::invalid_argument("equality block dimensions inconsistent");
  if (a_le.rows() != b_le.size() || (a_le.rows() > 0 && a_le.cols() != num_vars))
    throw std::invalid_argument("inequality block dimensions inconsistent");
}

FeasibilityResult simplex_feasibility(const LinearProgram& lp, double tol) {
  lp.validate();
  const int m_eq = int(lp.a_eq.rows());
  const int m_le = int(lp.a_le.rows());
  const int m = m_eq + m_le;
  const int n_struct = lp.num_vars;
  const int n_slack = m_le;
  const int n = n_struct + n_slack + m;  // structural + slack + artificial

  FeasibilityResult res;
  if (m == 0) {
    res.feasible = true;
    res.witness = Eigen::VectorXd::Zero(n_struct);
    return res;
  }

  // Coefficient-range condition heuristic.
  double max_c = 0.0, min_c = std::numeric_limits<double>::infinity();
  auto scan = [&](const Eigen::MatrixXd& a) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const double v = std::abs(a(i));
      if (v > 0.0) {
        max_c = std::max(max_c, v);
        min_c = std::min(min_c, v);
      }
    }
  };
  scan(lp.a_eq);
  scan(lp.a_le);
  res.ill_conditioned = max_c > 0.0 && max_c / min_c > 1e12;

  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m, n);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m_eq; ++i) {
    tab.row(i).head(n_struct) = lp.a_eq.row(i);
    rhs(i) = lp.b_eq(i);
  }
  for (int i = 0; i < m_le; ++i) {
    tab.row(m_eq + i).head(n_struct) = lp.a_le.row(i);
    tab(m_eq + i, n_struct + i) = 1.0;  // slack
    rhs(m_eq + i) = lp.b_le(i);
  }
  for (int i = 0; i < m; ++i) {
    if (rhs(i) < 0.0) {
      tab.row(i) = -tab.row(i);
      rhs(i) = -rhs(i);
    }
    tab(i, n_struct + n_slack + i) = 1.0;  // artificial
  }

  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[std::size_t(i)] = n_struct + n_slack + i;

  // Phase-1 objective: minimize the sum of artificials. The objective row is
  // stored priced out against the current basis.
  Eigen::VectorXd reduced = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n_struct + n_slack; ++j) reduced(j) = -tab.col(j).sum();
  double neg_obj = -rhs.sum();

  while (true) {
    // Bland: entering variable is the lowest-index negative reduced cost.
    int enter = -1;
    for (int j = 0; j < n; ++j)
      if (reduced(j) < -kPivotEps) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (tab(i, enter) <= kPivotEps) continue;
      const double ratio = rhs(i) / tab(i, enter);
      if (leave < 0 || ratio < best_ratio - kPivotEps ||
          (std::abs(ratio - best_ratio) <= kPivotEps &&
           basis[std::size_t(i)] < basis[std::size_t(leave)])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw std::runtime_error("phase-1 objective unbounded; malformed program");

    const double piv = tab(leave, enter);
    tab.row(leave) /= piv;
    rhs(leave) /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = tab(i, enter);
      if (f == 0.0) continue;
      tab.row(i) -= f * tab.row(leave);
      rhs(i) -= f * rhs(leave);
    }
    const double f = reduced(enter);
    reduced -= f * tab.row(leave).transpose();
    neg_obj -= f * rhs(leave);
    basis[std::size_t(leave)] = enter;
  }

  res.infeasibility = std::max(0.0, -neg_obj);
  res.feasible = res.infeasibility <= tol;
  if (res.feasible) {
    res.witness = Eigen::VectorXd::Zero(n_struct);
    for (int i = 0; i < m; ++i)
      if (basis[std::size_t(i)] < n_struct) res.witness(basis[std::size_t(i)]) = rhs(i);
  }
  return res;
}

}  // namespace lfsim::lfpoly
