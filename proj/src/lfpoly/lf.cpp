#include "lfsim/lfpoly/lf.hpp"

#include <cmath>
#include <stdexcept>

namespace lfsim::lfpoly {

namespace {

// Variable layout for the lf_feasible LP. All variables are products
// w_c * P(.|c,.) so the program stays linear.
constexpr int kNumVars = 26;
int w_var(int c) { return c; }
int b_var(int c, int y, int b) { return 2 + c * 4 + y * 2 + b; }
int a_var(int c, int y, int a, int b) { return 10 + c * 8 + y * 4 + a * 2 + b; }

}  // namespace

Behavior LFDecomposition::reconstruct() const {
  Behavior bh;
  for (int y = 0; y < 2; ++y)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        bh.at(0, y, a, b) = weight[a] * bob_given_c[a][y][b];  // a = c
        double p2 = 0.0;
        for (int c = 0; c < 2; ++c) p2 += weight[c] * joint_x2[c][y][a][b];
        bh.at(1, y, a, b) = p2;
      }
  return bh;
}

bool no_signaling_check(const Behavior& bh, double tol) {
  if (!bh.is_normalized(tol)) return false;
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a)
      if (std::abs(bh.alice_marginal(x, 0, a) - bh.alice_marginal(x, 1, a)) >
          tol)
        return false;
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b)
      if (std::abs(bh.bob_marginal(0, y, b) - bh.bob_marginal(1, y, b)) > tol)
        return false;
  return true;
}

std::vector<FacetCheck> chsh_facets_check(const Behavior& bh, double tol) {
  std::vector<FacetCheck> checks;
  for (int v = 1; v <= 8; ++v) {
    const double s = chsh_value(bh, v);
    checks.push_back({v, s, s > 2.0 + tol});
  }
  return checks;
}

LFCertificate lf_feasible(const Behavior& bh, double tol) {
  if (!bh.is_normalized(tol))
    throw std::invalid_argument("lf_feasible: behavior is not normalized");
  if (!no_signaling_check(bh, std::max(tol, 1e-7)))
    throw std::invalid_argument("lf_feasible: behavior is signaling");

  LinearProgram lp;
  lp.num_vars = kNumVars;
  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  auto add_row = [&](const Eigen::VectorXd& r, double v) {
    rows.push_back(r);
    rhs.push_back(v);
  };
  auto zero = [] { return Eigen::VectorXd::Zero(kNumVars).eval(); };

  {  // weights sum to 1
    auto r = zero();
    r(w_var(0)) = r(w_var(1)) = 1.0;
    add_row(r, 1.0);
  }
  for (int c = 0; c < 2; ++c)
    for (int y = 0; y < 2; ++y) {
      {  // Bob conditionals normalize against w_c
        auto r = zero();
        r(b_var(c, y, 0)) = r(b_var(c, y, 1)) = 1.0;
        r(w_var(c)) = -1.0;
        add_row(r, 0.0);
      }
      {  // x=2 joints normalize against w_c
        auto r = zero();
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) r(a_var(c, y, a, b)) = 1.0;
        r(w_var(c)) = -1.0;
        add_row(r, 0.0);
      }
      // Bob marginal consistent between the x=1 and x=2 branches
      for (int b = 0; b < 2; ++b) {
        auto r = zero();
        for (int a = 0; a < 2; ++a) r(a_var(c, y, a, b)) = 1.0;
        r(b_var(c, y, b)) = -1.0;
        add_row(r, 0.0);
      }
    }
  // Per-c no-signaling: Alice's x=2 marginal independent of y
  for (int c = 0; c < 2; ++c)
    for (int a = 0; a < 2; ++a) {
      auto r = zero();
      for (int b = 0; b < 2; ++b) {
        r(a_var(c, 0, a, b)) = 1.0;
        r(a_var(c, 1, a, b)) = -1.0;
      }
      add_row(r, 0.0);
    }
  // Reproduce the behavior. x=1 hard-wires a=c.
  for (int y = 0; y < 2; ++y)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        {
          auto r = zero();
          r(b_var(a, y, b)) = 1.0;
          add_row(r, bh.at(0, y, a, b));
        }
        {
          auto r = zero();
          for (int c = 0; c < 2; ++c) r(a_var(c, y, a, b)) = 1.0;
          add_row(r, bh.at(1, y, a, b));
        }
      }

  lp.a_eq.resize(Eigen::Index(rows.size()), kNumVars);
  lp.b_eq.resize(Eigen::Index(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    lp.a_eq.row(Eigen::Index(i)) = rows[i];
    lp.b_eq(Eigen::Index(i)) = rhs[i];
  }
  lp.a_le.resize(0, kNumVars);
  lp.b_le.resize(0);

  const FeasibilityResult lpres = simplex_feasibility(lp, tol);
  LFCertificate cert;
  cert.feasible = lpres.feasible;
  cert.gap = lpres.infeasibility;
  if (lpres.feasible) {
    LFDecomposition dec{};
    const Eigen::VectorXd& x = lpres.witness;
    for (int c = 0; c < 2; ++c) {
      dec.weight[c] = x(w_var(c));
      const bool degenerate = dec.weight[c] <= tol;
      for (int y = 0; y < 2; ++y) {
        for (int b = 0; b < 2; ++b)
          dec.bob_given_c[c][y][b] =
              degenerate ? 0.5 : x(b_var(c, y, b)) / dec.weight[c];
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            dec.joint_x2[c][y][a][b] =
                degenerate ? 0.25 : x(a_var(c, y, a, b)) / dec.weight[c];
      }
    }
    cert.decomposition = dec;
  } else {
    // Report the most violated CHSH facet as the witness.
    double worst = -1e300;
    for (const FacetCheck& f : chsh_facets_check(bh)) {
      if (f.value > worst) {
        worst = f.value;
        cert.violated_variant = f.variant;
        cert.violated_value = f.value;
      }
    }
  }
  return cert;
}

std::vector<Behavior> enumerate_lf_vertices() {
  std::vector<Behavior> vertices;
  for (int fa1 = 0; fa1 < 2; ++fa1)
    for (int fa2 = 0; fa2 < 2; ++fa2)
      for (int fb1 = 0; fb1 < 2; ++fb1)
        for (int fb2 = 0; fb2 < 2; ++fb2) {
          Behavior bh{};
          const int fa[2] = {fa1, fa2}, fb[2] = {fb1, fb2};
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) bh.at(x, y, fa[x], fb[y]) = 1.0;
          vertices.push_back(bh);
        }
  return vertices;
}

bool hull_membership(const Behavior& bh, const std::vector<Behavior>& vertices,
                     double tol) {
  if (vertices.empty())
    throw std::invalid_argument("hull_membership: no vertices");
  const int nv = int(vertices.size());
  LinearProgram lp;
  lp.num_vars = nv;
  lp.a_eq.resize(17, nv);
  lp.b_eq.resize(17);
  int row = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b, ++row) {
          for (int i = 0; i < nv; ++i)
            lp.a_eq(row, i) = vertices[std::size_t(i)].at(x, y, a, b);
          lp.b_eq(row) = bh.at(x, y, a, b);
        }
  lp.a_eq.row(16).setOnes();
  lp.b_eq(16) = 1.0;
  lp.a_le.resize(0, nv);
  lp.b_le.resize(0);
  return simplex_feasibility(lp, tol).feasible;
}

}  // namespace lfsim::lfpoly
