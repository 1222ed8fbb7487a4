#pragma once

#include <optional>
#include <vector>

#include "lfsim/ewfs/behavior.hpp"
#include "lfsim/lfpoly/simplex.hpp"

namespace lfsim::lfpoly {

using ewfs::Behavior;

/// Witnessing decomposition for a feasible behavior. The x=1 branch is
/// hard-wired to a=c, so only the friend-outcome weights, Bob's conditionals,
/// and the x=2 joint conditionals appear.
struct LFDecomposition {
  double weight[2];                 // P(c)
  double bob_given_c[2][2][2];      // [c][y][b] = P(b|c,y)
  double joint_x2[2][2][2][2];      // [c][y][a][b] = P(a,b|c,x=2,y)

  Behavior reconstruct() const;
};

struct LFCertificate {
  bool feasible = false;
  std::optional<LFDecomposition> decomposition;  // when feasible
  int violated_variant = 0;                      // when infeasible
  double violated_value = 0.0;
  double gap = 0.0;  // LP phase-1 slack
};

struct FacetCheck {
  int variant;
  double value;
  bool violated;
};

/// Alice marginal independent of y and Bob marginal independent of x.
bool no_signaling_check(const Behavior& bh, double tol = 1e-7);

/// All 8 CHSH sign variants against the local bound 2.
std::vector<FacetCheck> chsh_facets_check(const Behavior& bh,
                                          double tol = 1e-9);

/// Decides membership in the set of behaviors admitting the constrained
/// one-friend decomposition, by LP feasibility. Throws on unnormalized or
/// signaling input.
LFCertificate lf_feasible(const Behavior& bh, double tol = 1e-7);

/// The 16 local-deterministic behaviors a = f(x), b = g(y) of the
/// 2-setting/2-outcome scenario.
std::vector<Behavior> enumerate_lf_vertices();

/// Convex-hull membership by LP over vertex weights only; the independent
/// oracle for lf_feasible.
bool hull_membership(const Behavior& bh, const std::vector<Behavior>& vertices,
                     double tol = 1e-7);

}  // namespace lfsim::lfpoly
