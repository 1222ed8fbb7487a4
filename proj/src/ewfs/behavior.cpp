#include "lfsim/ewfs/behavior.hpp"

#include <cmath>
#include <stdexcept>

namespace lfsim::ewfs {

bool Behavior::is_normalized(double tol) const {
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          if (p[x][y][a][b] < -tol) return false;
          sum += p[x][y][a][b];
        }
      if (std::abs(sum - 1.0) > tol) return false;
    }
  return true;
}

double Behavior::correlator(int x, int y) const {
  double e = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      e += kOutcomeValue[a] * kOutcomeValue[b] * p[x][y][a][b];
  return e;
}

double Behavior::alice_marginal(int x, int y, int a) const {
  return p[x][y][a][0] + p[x][y][a][1];
}

double Behavior::bob_marginal(int x, int y, int b) const {
  return p[x][y][0][b] + p[x][y][1][b];
}

double chsh_value(const Behavior& bh, int variant) {
  if (variant < 1 || variant > 8)
    throw std::invalid_argument("chsh variant must be in 1..8");
  if (!bh.is_normalized())
    throw std::invalid_argument("chsh_value: behavior is not normalized");
  const int odd = (variant - 1) % 4;  // which term carries the odd sign
  const double overall = variant <= 4 ? 1.0 : -1.0;
  double s = 0.0;
  int term = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y, ++term)
      s += (term == odd ? -1.0 : 1.0) * bh.correlator(x, y);
  return overall * s;
}

double chsh_max(const Behavior& bh) {
  double best = -1e300;
  for (int v = 1; v <= 8; ++v) best = std::max(best, chsh_value(bh, v));
  return best;
}

}  // namespace lfsim::ewfs
