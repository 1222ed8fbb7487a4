#pragma once

#include <array>

namespace lfsim::ewfs {

/// Conditional distribution p(a,b|x,y) with settings x,y in {1,2} and
/// outcomes a,b in {+1,-1}. Internally outcomes are indexed 0 (=+1) and
/// 1 (=-1); settings are indexed 0 (=1) and 1 (=2).
struct Behavior {
  // p[x][y][a][b]
  std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> p{};

  double& at(int x, int y, int a, int b) { return p[x][y][a][b]; }
  double at(int x, int y, int a, int b) const { return p[x][y][a][b]; }

  /// Entries nonnegative and each setting pair normalized within tol.
  bool is_normalized(double tol = 1e-9) const;

  /// sum_ab a*b*p(ab|xy) with a,b as +/-1.
  double correlator(int x, int y) const;

  /// Marginal p(a|x, y) (should not depend on y for no-signaling behaviors).
  double alice_marginal(int x, int y, int a) const;
  double bob_marginal(int x, int y, int b) const;
};

inline constexpr int kOutcomeValue[2] = {+1, -1};

/// CHSH expression for one of the 8 sign variants (1..8): the first four pick
/// which correlator carries the odd sign, the last four are their negations.
double chsh_value(const Behavior& bh, int variant);

/// Largest chsh_value over all 8 variants.
double chsh_max(const Behavior& bh);

}  // namespace lfsim::ewfs
