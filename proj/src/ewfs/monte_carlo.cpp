#include "lfsim/ewfs/monte_carlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lfsim::ewfs {

namespace {

// splitmix64; used to derive independent per-trial substreams.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

MonteCarloResult monte_carlo(const ScenarioConfig& config,
                             std::uint64_t n_trials, std::uint64_t seed,
                             std::vector<TrialRecord>* records) {
  if (n_trials < 1) throw std::invalid_argument("need at least one trial");

  Eigen::Vector4d dist[2][2];
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) dist[x][y] = run_branch(config, x + 1, y + 1);

  MonteCarloResult res;
  std::array<std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2>, 2>
      counts{};

  for (std::uint64_t i = 0; i < n_trials; ++i) {
    std::mt19937_64 rng(mix(seed ^ mix(i)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (config.pullout_fraction > 0.0 && unit(rng) < config.pullout_fraction) {
      ++res.trials_discarded;
      continue;
    }
    const int x = rng() & 1;
    const int y = rng() & 1;
    const double u = unit(rng);
    double acc = 0.0;
    int outcome = 3;
    for (int o = 0; o < 4; ++o) {
      acc += dist[x][y](o);
      if (u < acc) {
        outcome = o;
        break;
      }
    }
    const int a = outcome >> 1, b = outcome & 1;
    counts[x][y][a][b] += 1;
    ++res.trials_kept;
    if (records)
      records->push_back(
          {x + 1, y + 1, kOutcomeValue[a], kOutcomeValue[b], i});
  }

  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      std::uint64_t n_xy = 0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) n_xy += counts[x][y][a][b];
      res.counts_per_setting[x][y] = n_xy;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const double p =
              n_xy == 0 ? 0.25 : double(counts[x][y][a][b]) / double(n_xy);
          res.empirical.at(x, y, a, b) = p;
          res.standard_error.at(x, y, a, b) =
              n_xy == 0 ? 0.5 : std::sqrt(p * (1.0 - p) / double(n_xy));
        }
    }

  res.chsh = chsh_max(res.empirical);
  double var = 0.0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const double e = res.empirical.correlator(x, y);
      const std::uint64_t n_xy = res.counts_per_setting[x][y];
      var += n_xy == 0 ? 1.0 : (1.0 - e * e) / double(n_xy);
    }
  res.chsh_standard_error = std::sqrt(var);
  return res;
}

}  // namespace lfsim::ewfs
