#pragma once

#include <cstdint>
#include <vector>

#include "lfsim/ewfs/scenario.hpp"

namespace lfsim::ewfs {

struct TrialRecord {
  int x, y;       // settings in {1,2}
  int a, b;       // outcomes in {+1,-1}
  std::uint64_t trial_index;
};

struct MonteCarloResult {
  Behavior empirical;
  Behavior standard_error;          // per-entry binomial standard errors
  std::array<std::array<std::uint64_t, 2>, 2> counts_per_setting{};
  std::uint64_t trials_kept = 0;
  std::uint64_t trials_discarded = 0;  // friend pull-outs
  double chsh;                      // max over variants, from `empirical`
  double chsh_standard_error;       // error propagated through the correlators
};

/// Finite-statistics run: settings drawn uniformly i.i.d. per trial, outcomes
/// sampled from the exact per-setting distributions. Each trial uses an RNG
/// substream derived from (seed, trial index), so results are reproducible
/// and independent of evaluation order.
MonteCarloResult monte_carlo(const ScenarioConfig& config,
                             std::uint64_t n_trials, std::uint64_t seed,
                             std::vector<TrialRecord>* records = nullptr);

}  // namespace lfsim::ewfs
