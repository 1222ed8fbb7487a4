// Acceptance gate: ten end-to-end criteria, one verdict line each.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "lfsim/estimator/estimator.hpp"
#include "lfsim/ewfs/monte_carlo.hpp"
#include "lfsim/ewfs/scenario.hpp"
#include "lfsim/lfpoly/lf.hpp"
#include "lfsim/qsim/operators.hpp"
#include "lfsim/qsim/ops.hpp"
#include "lfsim/spacetime/schedule.hpp"

using namespace lfsim;
using ewfs::Behavior;
using ewfs::ScenarioConfig;

namespace {

int failures = 0;

void verdict(int number, const std::string& name, bool ok,
             const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

const double kRoot2 = std::sqrt(2.0);

bool within_rel(double value, double target, double rel) {
  return std::abs(value - target) <= rel * std::abs(target);
}

// 1. Maximal violation at the canonical settings, within 1e-9, under 1 s.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const double s = ewfs::chsh_max(ewfs::behavior(ScenarioConfig::tsirelson_defaults()));
  const double elapsed = seconds_since(t0);
  char detail[128];
  std::snprintf(detail, sizeof detail, "S=%.12f, target 2*sqrt(2), %.3fs",
                s, elapsed);
  verdict(1, "maximal CHSH at canonical settings",
          std::abs(s - 2.0 * kRoot2) < 1e-9 && elapsed < 1.0, detail);
}

// 2. Undoing the observation is exact: the x=2 statistics match a plain
// two-qubit measurement, and the lab state comes back with fidelity 1.
void criterion_2() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  double worst_dist = 0.0, worst_fid = 1.0;
  for (int trial = 0; trial < 12; ++trial) {
    ScenarioConfig cfg = ScenarioConfig::tsirelson_defaults();
    cfg.n_friend_qubits = 1 + int(rng() % 6);
    cfg.scramble_seed = rng();
    cfg.alice_x2_angle = angle(rng);
    cfg.bob_angles[0] = angle(rng);
    cfg.bob_angles[1] = angle(rng);
    const auto pair =
        qsim::QuantumState::pure(cfg.initial_two_qubit_state, {"QA", "QB"});
    for (int y = 1; y <= 2; ++y) {
      const Eigen::Vector4d got = ewfs::run_branch(cfg, 2, y);
      const Eigen::VectorXd want = qsim::joint_distribution(
          pair, {{"QA", qsim::bloch_basis(cfg.alice_x2_angle)},
                 {"QB", qsim::bloch_basis(cfg.bob_angles[y - 1])}});
      worst_dist = std::max(worst_dist, (got - want).cwiseAbs().maxCoeff());
    }
    const auto flag =
        ewfs::deutsch_flag_demo(cfg, ewfs::FlagMode::kIndependent);
    worst_fid = std::min(worst_fid, flag.restoration_fidelity);
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "max |dp|=%.2e, min restored fidelity=%.12f", worst_dist,
                worst_fid);
  verdict(2, "measurement reversal is exact",
          worst_dist < 1e-10 && std::abs(worst_fid - 1.0) < 1e-10, detail);
}

// 3. Depolarizing robustness: still outside the polytope up to 20% noise,
// with the S=2 crossing at 1 - 1/sqrt(2).
void criterion_3() {
  ScenarioConfig cfg = ScenarioConfig::tsirelson_defaults();
  cfg.noise_point = ewfs::NoisePoint::kInitialState;
  bool all_infeasible = true;
  for (double p = 0.0; p <= 0.201; p += 0.05) {
    cfg.depolarizing_p = p;
    all_infeasible = all_infeasible && !lfpoly::lf_feasible(ewfs::behavior(cfg)).feasible;
  }
  const double crossing = ewfs::chsh_crossing_noise(ScenarioConfig::tsirelson_defaults());
  const double expect = 1.0 - 1.0 / kRoot2;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "infeasible through p=0.20: %s; crossing=%.9f vs %.9f",
                all_infeasible ? "yes" : "no", crossing, expect);
  verdict(3, "20% depolarizing noise tolerated",
          all_infeasible && std::abs(crossing - expect) < 1e-6, detail);
}

// 4. Three independent membership deciders agree on 10^4 random behaviors.
void criterion_4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto vertices = lfpoly::enumerate_lf_vertices();
  Behavior pr{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          pr.at(x, y, a, b) = ((a ^ b) == (x & y)) ? 0.5 : 0.0;

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int disagreements = 0, infeasible_seen = 0;
  const int trials = 10000;
  for (int trial = 0; trial < trials; ++trial) {
    Behavior bh{};
    double total = 0.0;
    std::array<double, 16> w{};
    for (double& wi : w) total += (wi = -std::log(unif(rng)));
    for (int i = 0; i < 16; ++i)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              bh.at(x, y, a, b) += w[std::size_t(i)] / total *
                                   vertices[std::size_t(i)].at(x, y, a, b);
    if (trial % 2 == 1) {
      const double f = unif(rng);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              bh.at(x, y, a, b) =
                  f * pr.at(x, y, a, b) + (1.0 - f) * bh.at(x, y, a, b);
    }
    const bool lp = lfpoly::lf_feasible(bh, 1e-7).feasible;
    const bool hull = lfpoly::hull_membership(bh, vertices, 1e-7);
    bool facets = lfpoly::no_signaling_check(bh, 1e-7);
    for (const auto& f : lfpoly::chsh_facets_check(bh, 1e-7))
      facets = facets && !f.violated;
    if (lp != hull || lp != facets) ++disagreements;
    if (!lp) ++infeasible_seen;
  }
  const double elapsed = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d trials, %d disagreements, %d infeasible, %.1fs", trials,
                disagreements, infeasible_seen, elapsed);
  verdict(4, "LP = vertex hull = facet description", disagreements == 0 &&
          infeasible_seen > 100 && elapsed < 60.0, detail);
}

// 5. Flag dichotomy: a value-independent record changes nothing; a
// value-dependent record caps the violation at the classical bound.
void criterion_5() {
  const ScenarioConfig cfg = ScenarioConfig::tsirelson_defaults();
  const auto indep = ewfs::deutsch_flag_demo(cfg, ewfs::FlagMode::kIndependent);
  const auto dep = ewfs::deutsch_flag_demo(cfg, ewfs::FlagMode::kValueDependent);
  ScenarioConfig aligned = cfg;
  aligned.bob_angles[0] = aligned.bob_angles[1] = 0.0;
  const auto dep2 = ewfs::deutsch_flag_demo(aligned, ewfs::FlagMode::kValueDependent);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "indep: S=%.9f F=%.9f; dep: S=%.9f; aligned dep: S=%.9f",
                indep.chsh, indep.restoration_fidelity, dep.chsh, dep2.chsh);
  verdict(5, "which-path flag dichotomy",
          std::abs(indep.chsh - 2.0 * kRoot2) < 1e-9 &&
              std::abs(indep.restoration_fidelity - 1.0) < 1e-9 &&
              dep.chsh <= 2.0 + 1e-9 && std::abs(dep2.chsh - 2.0) < 1e-9,
          detail);
}

// 6. Resource chain headline numbers in rounded mode.
void criterion_6() {
  estimator::EstimatorInputs in;  // rounded defaults, p_ratio 0.01
  const auto rep = estimator::full_report(in);

  estimator::EstimatorInputs in01 = in;
  in01.p_ratio = 0.1;
  const int d01 = estimator::full_report(in01).code_distance;
  estimator::EstimatorInputs in0001 = in;
  in0001.p_ratio = 0.001;
  const int d0001 = estimator::full_report(in0001).code_distance;
  const double brown =
      estimator::toffoli_time(33, 1e-6, estimator::ToffoliScheme::kBrown3d);

  const bool ok = rep.gamma_per_second == 1e19 &&
                  rep.delta_per_second == 1e11 && rep.t_l == 1e14 &&
                  rep.s_l == 3e19 && std::abs(d01 - 66) <= 2 &&
                  std::abs(rep.code_distance - 34) <= 1 &&
                  within_rel(rep.tau_ltof_seconds, 189e-6, 0.02) &&
                  within_rel(rep.t_q_seconds, 1.89e10, 0.02) &&
                  within_rel(rep.factory_qubits_each, 1.6e5, 0.05) &&
                  within_rel(rep.factory_qubits_total, 1.6e12, 0.05) &&
                  brown == 99e-6 && std::abs(d0001 - 22) <= 1;
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "d=%d/%d/%d, tau=%.1fus, T_Q=%.3g s, factory %.3g/%.3g, "
                "brown=%.0fus",
                d01, rep.code_distance, d0001, rep.tau_ltof_seconds * 1e6,
                rep.t_q_seconds, rep.factory_qubits_each,
                rep.factory_qubits_total, brown * 1e6);
  verdict(6, "resource chain headline numbers", ok, detail);
}

// 7. Connectivity overhead factors at 1e19 qubits.
void criterion_7() {
  const double beals = estimator::routing_factor(estimator::RoutingModel::kBeals, 1e19);
  const double brierley =
      estimator::routing_factor(estimator::RoutingModel::kBrierley, 1e19);
  const double herbert =
      estimator::routing_factor(estimator::RoutingModel::kHerbert, 1e19);
  char detail[128];
  std::snprintf(detail, sizeof detail, "beals=%.1f brierley=%.1f herbert=%.1f",
                beals, brierley, herbert);
  verdict(7, "routing factors",
          beals >= 1900.0 && beals <= 2100.0 && brierley >= 370.0 &&
              brierley <= 390.0 && herbert >= 245.0 && herbert <= 260.0,
          detail);
}

// 8. Pebble game simulation equals the closed form.
void criterion_8() {
  bool ok = true;
  for (int L = 0; L <= 10; ++L) {
    const auto r = estimator::pebble_game_simulate(std::int64_t(1) << L);
    std::int64_t pow3 = 1;
    for (int i = 0; i < L; ++i) pow3 *= 3;
    ok = ok && r.segment_executions == pow3 && r.max_pebbles == L + 1;
  }
  verdict(8, "pebble game closed form (3^L, L+1), L<=10", ok, "exact match");
}

// 9. Canonical schedule validates; minimum separation of order one
// light-second and linear in T.
void criterion_9() {
  const bool valid =
      spacetime::validate_schedule(spacetime::canonical_schedule(1.0, 2.0))
          .all_passed;
  const double sep1 = spacetime::min_bob_separation(1.0).overall;
  const double sep3 = spacetime::min_bob_separation(3.0).overall;
  char detail[128];
  std::snprintf(detail, sizeof detail, "valid=%s, minsep(1s)=%.6f ls, "
                "minsep(3s)/3=%.6f", valid ? "yes" : "no", sep1, sep3 / 3.0);
  verdict(9, "space-time layout",
          valid && sep1 >= 1.0 && sep1 <= 3.0 &&
              std::abs(sep3 - 3.0 * sep1) < 1e-5,
          detail);
}

// 10. Finite statistics agree with the exact value and are reproducible.
void criterion_10() {
  const ScenarioConfig cfg = ScenarioConfig::tsirelson_defaults();
  const auto a = ewfs::monte_carlo(cfg, 1000000, 31337);
  const auto b = ewfs::monte_carlo(cfg, 1000000, 31337);
  bool identical = a.chsh == b.chsh && a.trials_kept == b.trials_kept;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int aa = 0; aa < 2; ++aa)
        for (int bb = 0; bb < 2; ++bb)
          identical = identical && a.empirical.at(x, y, aa, bb) ==
                                       b.empirical.at(x, y, aa, bb);
  const double dev = std::abs(a.chsh - 2.0 * kRoot2);
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "S=%.6f +/- %.6f (%.2f sigma off), reproducible=%s", a.chsh,
                a.chsh_standard_error, dev / a.chsh_standard_error,
                identical ? "yes" : "no");
  verdict(10, "monte carlo statistics",
          dev <= 5.0 * a.chsh_standard_error && identical, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::printf("all 10 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
