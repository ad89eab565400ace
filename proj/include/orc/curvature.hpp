#pragma once

#include <map>
#include <string>
#include <vector>

#include "orc/graph.hpp"
#include "orc/measure.hpp"
#include "orc/rational.hpp"
#include "orc/transport.hpp"

namespace orc {

// Ollivier-Ricci curvature with idleness p:
//   kappa_p(x,y) = 1 - W1(mu_x^p, mu_y^p) / d(x,y).
// Requires x != y in the same component, p in [0,1].
Rational kappa_p(const Graph& g, const DistanceMatrix& dist, int x, int y,
                 const Rational& p);

// Same, but also returns the W1 certificate (potential anchored at y).
struct KappaResult {
  Rational kappa;
  W1Certificate certificate;
};
KappaResult kappa_p_certified(const Graph& g, const DistanceMatrix& dist, int x,
                              int y, const Rational& p);

// Lin-Lu-Yau curvature. The idleness function is linear on [1/2, 1] and
// vanishes at 1, so the limit of kappa_p/(1-p) equals 2*kappa_{1/2}.
Rational kappa_lly(const Graph& g, const DistanceMatrix& dist, int x, int y);

// Supremum of F(phi) = avg of phi over N(x) minus avg over N(y) across
// integer 1-Lipschitz potentials with phi(x)-phi(y) = j. Solved exactly as
// the dual of a unit-cost transshipment with a two-arc pin enforcing the
// potential gap; the flow's own node potentials give an integer witness,
// optionally returned through `witness`. Requires d(x,y) >= 2
// (Error("DistanceTooSmall")) and |j| <= d(x,y) (Error("InfeasiblePin")).
Rational potential_sup_cj(const Graph& g, const DistanceMatrix& dist, int x,
                          int y, int j, std::map<int, Int>* witness = nullptr);

// Idleness function of a pair at distance delta >= 2, exact in closed form:
//   W1(p) = max(f_lo, f_mid, f_hi),  f(p) = p*j + (1-p)*c_j
// over j = delta-2, delta-1, delta. Since each c_j is attained by an
// integer potential and the three lines are strictly ordered by slope, the
// curvature p -> kappa_p is concave piecewise linear with at most three
// pieces and candidate breakpoints p1 <= p2 below:
//   p1 = (c_lo - c_mid) / (c_lo - c_mid + 1)
//   p2 = (c_mid - c_hi) / (c_mid - c_hi + 1)
// (a candidate is a genuine breakpoint only when it lands in (0,1)).
struct IdlenessProfile {
  int delta = 0;
  int deg_x = 0;
  int deg_y = 0;
  Rational c_lo, c_mid, c_hi;  // c_{delta-2}, c_{delta-1}, c_delta
  Rational p1, p2;
};

// Throws Error("DistanceTooSmall") when d(x,y) < 2.
IdlenessProfile idleness_profile(const Graph& g, const DistanceMatrix& dist,
                                 int x, int y);

// Genuine breakpoints of the idleness function: the candidates p1, p2
// filtered to (0,1), deduplicated, ascending.
std::vector<Rational> critical_points(const IdlenessProfile& profile);

// kappa_p from the closed form; agrees with kappa_p() everywhere on [0,1].
Rational evaluate_profile(const IdlenessProfile& profile, const Rational& p);

// Piecewise-linear function on [0,1] stored as breakpoints with values.
// Breakpoints are genuine: the slope changes at every interior one.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values);

  Rational operator()(const Rational& p) const;
  int piece_count() const { return static_cast<int>(breakpoints_.size()) - 1; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  Rational slope(int piece) const;

 private:
  std::vector<Rational> breakpoints_;  // ascending, first 0, last 1
  std::vector<Rational> values_;
};

// Reconstructs p -> kappa_p for any pair (including neighbors, where the
// closed form above does not apply) purely from exact point evaluations.
// Samples a candidate grid {a/(a+lcm(deg_x,deg_y))} plus midpoints, groups
// maximal collinear runs, and certifies each breakpoint by evaluating at
// the intersection of the neighboring lines; concavity makes that equality
// check conclusive. Throws Error("MoreThanThreePieces") if more than three
// certified pieces emerge.
PiecewiseLinear reconstruct_by_sampling(const Graph& g, const DistanceMatrix& dist,
                                        int x, int y);

// Structural bounds a profile must satisfy; each check carries the two
// exactly compared sides. Covers the chain
//   -1 < c_lo - c_mid <= c_mid - c_hi <= max(0, 1 - 1/deg_x - 1/deg_y)
// (the right bound floors at 0: when an endpoint is a leaf the difference
// c_mid - c_hi can reach 0 but never exceeds it), the breakpoint cap
// p <= 1/2 - (1/2)(dx+dy)/(2 dx dy - dx - dy), the form p = a/(a+lcm) with
// the floor 1/(1+lcm), and the piece-coverage facts (last piece from at
// most 1/2, first piece to at least 1/(1+lcm)). Any breakpoint inside (0,1)
// forces c_mid - c_hi > 0, which makes the cap's denominator positive, so
// the cap checks are emitted exactly when breakpoints exist.
struct BoundReport {
  struct Check {
    std::string name;
    bool pass;
    Rational lhs, rhs;
  };
  std::vector<Check> checks;
  bool all_pass() const;
};
BoundReport check_critical_bounds(const IdlenessProfile& profile);

// Curvature of a Cartesian product of regular graphs from the factors, for
// p in [1/2, 1): with factors D_G- and D_H-regular and coordinate distances
// dx = d_G(x1,x2), dy = d_H(y1,y2),
//   kappa = (D_G*dx*kG + D_H*dy*kH) / ((D_G+D_H)(dx+dy)).
// A factor at distance zero contributes nothing regardless of its kappa
// argument. Throws Error("BothDistancesZero") when dx = dy = 0. The same
// expression maps Lin-Lu-Yau inputs to the product's Lin-Lu-Yau curvature.
Rational product_formula_rhs(const Rational& kappa_g, const Rational& kappa_h,
                             int deg_g, int deg_h, int dist_x, int dist_y);

// Positive curvature bounds distances: any pair with kappa_p(x,y) >= kappa
// for kappa > 0 satisfies d(x,y) <= 2(1-p)/kappa. Requires p in [0,1);
// throws Error("NonPositiveKappa") for kappa <= 0.
Rational bonnet_myers_diameter_bound(const Rational& kappa, const Rational& p);

// phi(x) - phi(y) for the integerized optimal potential at idleness p,
// anchored at y. Always within [delta-2, delta]; equals delta once p > 1/2.
// Requires d(x,y) >= 2 and p in (0, 1].
Int optimal_potential_gap(const Graph& g, const DistanceMatrix& dist, int x,
                          int y, const Rational& p);

// Profile JSON:
// {"delta": 3, "c": ["8/5","7/5","1/1"], "critical_points": ["1/6","2/7"],
//  "pieces": [{"from":...,"to":...,"slope":...,"intercept":...}, ...]}
// Pieces describe kappa_p on [0,1] with exact rational slope/intercept;
// degenerate pieces are collapsed.
std::string profile_to_json(const IdlenessProfile& profile);

}  // namespace orc
