#include "orc/curvature.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "orc/errors.hpp"
#include "orc/min_cost_flow.hpp"

namespace orc {

namespace {

void require_distinct_reachable(const DistanceMatrix& dist, int x, int y) {
  if (x == y) fail("DistanceTooSmall", "curvature needs two distinct vertices");
  if (x < 0 || y < 0 || x >= dist.vertex_count() || y >= dist.vertex_count())
    fail("IndexOutOfRange", "vertex pair (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
  if (!dist.reachable(x, y))
    fail("DisconnectedSupports", "vertices " + std::to_string(x) + " and " +
                                     std::to_string(y) + " are not connected");
}

}  // namespace

KappaResult kappa_p_certified(const Graph& g, const DistanceMatrix& dist, int x,
                              int y, const Rational& p) {
  require_distinct_reachable(dist, x, y);
  const Measure mu = lazy_measure(g, x, p);
  const Measure nu = lazy_measure(g, y, p);
  W1Certificate cert = w1(g, dist, mu, nu, y);
  const Rational kappa = 1 - cert.value / dist(x, y);
  return KappaResult{kappa, std::move(cert)};
}

Rational kappa_p(const Graph& g, const DistanceMatrix& dist, int x, int y,
                 const Rational& p) {
  return kappa_p_certified(g, dist, x, y, p).kappa;
}

Rational kappa_lly(const Graph& g, const DistanceMatrix& dist, int x, int y) {
  return 2 * kappa_p(g, dist, x, y, Rational(1, 2));
}

Rational potential_sup_cj(const Graph& g, const DistanceMatrix& dist, int x,
                          int y, int j, std::map<int, Int>* witness) {
  require_distinct_reachable(dist, x, y);
  const int delta = dist(x, y);
  if (delta < 2)
    fail("DistanceTooSmall", "pinned suprema need d(x,y) >= 2, got " +
                                 std::to_string(delta));
  if (j < -delta || j > delta)
    fail("InfeasiblePin", "no 1-Lipschitz potential has gap " + std::to_string(j) +
                              " across distance " + std::to_string(delta));

  std::vector<int> comp;
  std::vector<int> index(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist.reachable(x, v)) {
      index[v] = static_cast<int>(comp.size());
      comp.push_back(v);
    }
  }

  // Dual of max F(phi) over 1-Lipschitz phi with phi(x)-phi(y) = j: route
  // supply M/deg(x) out of each neighbor of x and into each neighbor of y
  // (M = lcm of the degrees keeps everything integral) through unit-cost
  // arcs along edges, plus the pin pair x->y at cost j and y->x at cost -j
  // that forces the gap. The optimal flow's node potentials are an integer
  // maximizer, and cost/M is the supremum.
  const Int m_scale = lcm(Int(g.degree(x)), Int(g.degree(y)));
  std::vector<Int> supply(comp.size(), 0);
  for (int w : g.neighbors(x)) supply[index[w]] += m_scale / g.degree(x);
  for (int w : g.neighbors(y)) supply[index[w]] -= m_scale / g.degree(y);
  Int total_supply = 0;
  for (const Int& s : supply)
    if (s > 0) total_supply += s;

  if (total_supply == 0) {
    // F vanishes identically (the two neighborhoods carry identical
    // weights), so any pinned potential is optimal.
    if (witness) {
      witness->clear();
      for (int v : comp)
        (*witness)[v] = std::max(Int(0), Int(j - dist(x, v)));
    }
    return 0;
  }

  const Int cap = total_supply + 1;  // above any possible arc flow
  MinCostFlow flow(static_cast<int>(comp.size()));
  for (const auto& [u, v] : g.edges()) {
    if (index[u] < 0) continue;
    flow.add_arc(index[u], index[v], cap, 1);
    flow.add_arc(index[v], index[u], cap, 1);
  }
  flow.add_arc(index[x], index[y], cap, j);
  flow.add_arc(index[y], index[x], cap, -j);

  const Int total_cost = flow.route_supplies(supply);
  const Rational value(total_cost, m_scale);

  // The potentials certify the value; their failure is a solver defect.
  std::map<int, Int> phi;
  const Int base = flow.potential(index[y]);
  for (int v : comp) phi[v] = base - flow.potential(index[v]);
  if (phi.at(x) != j)
    throw std::logic_error("pinned potential does not attain the pin");
  Rational attained = 0;
  for (int w : g.neighbors(x)) attained += Rational(phi.at(w)) / g.degree(x);
  for (int w : g.neighbors(y)) attained -= Rational(phi.at(w)) / g.degree(y);
  if (attained != value)
    throw std::logic_error("pinned potential does not attain the flow value");
  if (witness) *witness = std::move(phi);
  return value;
}

IdlenessProfile idleness_profile(const Graph& g, const DistanceMatrix& dist,
                                 int x, int y) {
  require_distinct_reachable(dist, x, y);
  const int delta = dist(x, y);
  if (delta < 2)
    fail("DistanceTooSmall", "idleness profile needs d(x,y) >= 2, got " +
                                 std::to_string(delta));
  IdlenessProfile prof;
  prof.delta = delta;
  prof.deg_x = g.degree(x);
  prof.deg_y = g.degree(y);
  prof.c_lo = potential_sup_cj(g, dist, x, y, delta - 2);
  prof.c_mid = potential_sup_cj(g, dist, x, y, delta - 1);
  prof.c_hi = potential_sup_cj(g, dist, x, y, delta);

  const Rational gap_lo = prof.c_lo - prof.c_mid;
  const Rational gap_hi = prof.c_mid - prof.c_hi;
  // Guaranteed for every pair at distance >= 2; a violation would mean the
  // pinned-potential solver is broken. The right bound floors at 0: a leaf
  // endpoint makes 1 - 1/deg_x - 1/deg_y negative while c_mid - c_hi can
  // legitimately sit at 0 (for twin leaves all three constants coincide).
  const Rational chain_cap = std::max(
      Rational(0), Rational(1 - Rational(1, prof.deg_x) - Rational(1, prof.deg_y)));
  if (!(Rational(-1) < gap_lo && gap_lo <= gap_hi && gap_hi <= chain_cap))
    throw std::logic_error("pinned-potential chain violated");

  prof.p1 = gap_lo / (gap_lo + 1);
  prof.p2 = gap_hi / (gap_hi + 1);
  return prof;
}

std::vector<Rational> critical_points(const IdlenessProfile& profile) {
  std::vector<Rational> pts;
  for (const Rational& p : {profile.p1, profile.p2}) {
    if (p > 0 && p < 1) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

Rational profile_w1(const IdlenessProfile& prof, const Rational& p) {
  Rational best = p * (prof.delta - 2) + (1 - p) * prof.c_lo;
  best = std::max(best, Rational(p * (prof.delta - 1) + (1 - p) * prof.c_mid));
  best = std::max(best, Rational(p * prof.delta + (1 - p) * prof.c_hi));
  return best;
}

}  // namespace

Rational evaluate_profile(const IdlenessProfile& profile, const Rational& p) {
  if (p < 0 || p > 1)
    fail("BadIdleness", "idleness must lie in [0,1], got " + format_rational(p));
  return 1 - profile_w1(profile, p) / profile.delta;
}

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints,
                                 std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size() || breakpoints_.size() < 2 ||
      breakpoints_.front() != 0 || breakpoints_.back() != 1 ||
      !std::is_sorted(breakpoints_.begin(), breakpoints_.end()))
    throw std::logic_error("malformed piecewise-linear data");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (breakpoints_[i] == breakpoints_[i + 1])
      throw std::logic_error("duplicate piecewise-linear breakpoint");
  }
  for (int i = 0; i + 1 < piece_count(); ++i) {
    if (slope(i) == slope(i + 1))
      throw std::logic_error("piecewise-linear breakpoint without slope change");
  }
}

Rational PiecewiseLinear::slope(int piece) const {
  return (values_[piece + 1] - values_[piece]) /
         (breakpoints_[piece + 1] - breakpoints_[piece]);
}

Rational PiecewiseLinear::operator()(const Rational& p) const {
  if (p < 0 || p > 1)
    fail("BadIdleness", "idleness must lie in [0,1], got " + format_rational(p));
  std::size_t hi = 1;
  while (breakpoints_[hi] < p) ++hi;
  const Rational& a = breakpoints_[hi - 1];
  return values_[hi - 1] + slope(static_cast<int>(hi) - 1) * (p - a);
}

PiecewiseLinear reconstruct_by_sampling(const Graph& g, const DistanceMatrix& dist,
                                        int x, int y) {
  require_distinct_reachable(dist, x, y);
  if (g.degree(x) == 0 || g.degree(y) == 0)
    fail("IsolatedVertex", "curvature needs positive degrees");

  std::map<Rational, Rational> samples;
  auto kap = [&](const Rational& p) {
    auto it = samples.find(p);
    if (it == samples.end())
      it = samples.emplace(p, kappa_p(g, dist, x, y, p)).first;
    return it->second;
  };

  // Candidate grid: every a/(a+lcm) breakpoint shape the structure theory
  // allows, then midpoints so each candidate gap starts with two samples.
  const Int l = lcm(Int(g.degree(x)), Int(g.degree(y)));
  std::vector<Rational> grid = {0};
  for (Int a = 1; a <= l; ++a) grid.emplace_back(a, a + l);
  grid.emplace_back(1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    kap((grid[i] + grid[i + 1]) / 2);
  for (const Rational& p : grid) kap(p);

  struct Run {
    std::size_t first_gap, last_gap;  // inclusive gap indices
    Rational slope;
  };

  for (int round = 0;; ++round) {
    if (round > 64)
      throw std::logic_error("piecewise reconstruction failed to converge");

    std::vector<std::pair<Rational, Rational>> pts(samples.begin(), samples.end());
    const std::size_t gaps = pts.size() - 1;
    std::vector<Rational> secant(gaps);
    for (std::size_t i = 0; i < gaps; ++i) {
      secant[i] = (pts[i + 1].second - pts[i].second) /
                  (pts[i + 1].first - pts[i].first);
    }
    for (std::size_t i = 0; i + 1 < gaps; ++i) {
      if (secant[i] < secant[i + 1])
        throw std::logic_error("sampled idleness function is not concave");
    }

    std::vector<Run> runs;
    for (std::size_t i = 0; i < gaps; ++i) {
      if (!runs.empty() && runs.back().slope == secant[i]) {
        runs.back().last_gap = i;
      } else {
        runs.push_back(Run{i, i, secant[i]});
      }
    }

    bool refined = false;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      if (runs[r].last_gap > runs[r].first_gap) continue;  // certified
      const std::size_t gap = runs[r].first_gap;
      const Rational left = pts[gap].first, right = pts[gap + 1].first;

      // A lone gap between two certified runs straddles one breakpoint;
      // the intersection of the neighboring lines names it, and the
      // evaluation there proves it (by concavity the function can equal
      // both line extensions at a point only if it follows them into it).
      if (r > 0 && r + 1 < runs.size() &&
          runs[r - 1].last_gap > runs[r - 1].first_gap &&
          runs[r + 1].last_gap > runs[r + 1].first_gap) {
        const auto& la = pts[runs[r - 1].first_gap];
        const auto& lb = pts[runs[r + 1].first_gap];
        const Rational s1 = runs[r - 1].slope, s2 = runs[r + 1].slope;
        const Rational i1 = la.second - s1 * la.first;
        const Rational i2 = lb.second - s2 * lb.first;
        const Rational q = (i2 - i1) / (s1 - s2);
        if (q > left && q < right && kap(q) == s1 * q + i1) {
          refined = true;  // q joins the samples and resolves the gap
          continue;
        }
      }
      kap((left + right) / 2);
      refined = true;
    }
    if (refined) continue;

    // Every run is certified; runs meet at genuine breakpoints.
    if (runs.size() > 3)
      fail("MoreThanThreePieces",
           "idleness function shows " + std::to_string(runs.size()) + " pieces");
    std::vector<Rational> bps, vals;
    bps.push_back(pts.front().first);
    vals.push_back(pts.front().second);
    for (std::size_t r = 0; r + 1 < runs.size(); ++r) {
      const auto& meet = pts[runs[r].last_gap + 1];
      bps.push_back(meet.first);
      vals.push_back(meet.second);
    }
    bps.push_back(pts.back().first);
    vals.push_back(pts.back().second);
    return PiecewiseLinear(std::move(bps), std::move(vals));
  }
}

bool BoundReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

BoundReport check_critical_bounds(const IdlenessProfile& profile) {
  BoundReport report;
  auto add = [&](std::string name, bool pass, Rational lhs, Rational rhs) {
    report.checks.push_back({std::move(name), pass, std::move(lhs), std::move(rhs)});
  };

  const Rational gap_lo = profile.c_lo - profile.c_mid;
  const Rational gap_hi = profile.c_mid - profile.c_hi;
  const Rational degree_term = std::max(
      Rational(0),
      Rational(1 - Rational(1, profile.deg_x) - Rational(1, profile.deg_y)));
  add("chain: -1 < c_lo - c_mid", Rational(-1) < gap_lo, -1, gap_lo);
  add("chain: c_lo - c_mid <= c_mid - c_hi", gap_lo <= gap_hi, gap_lo, gap_hi);
  add("chain: c_mid - c_hi <= max(0, 1 - 1/dx - 1/dy)", gap_hi <= degree_term,
      gap_hi, degree_term);

  const Int l = lcm(Int(profile.deg_x), Int(profile.deg_y));
  const Rational lcm_floor = Rational(Int(1), l + 1);
  const std::vector<Rational> pts = critical_points(profile);
  for (const Rational& p : pts) {
    // p in (0,1) forces c_mid - c_hi > 0, hence 2 dx dy - dx - dy > 0; the
    // cap's denominator cannot vanish once a breakpoint exists.
    const Rational cap =
        Rational(1, 2) - Rational(profile.deg_x + profile.deg_y,
                                  2 * (2 * profile.deg_x * profile.deg_y -
                                       profile.deg_x - profile.deg_y));
    add("critical point <= degree cap", p <= cap, p, cap);
    add("critical point >= 1/(1+lcm)", p >= lcm_floor, p, lcm_floor);
    // p = a/(a+lcm) for a positive integer a.
    const Rational a = Rational(l) * p / (1 - p);
    add("critical point has form a/(a+lcm)",
        is_integer(a) && a >= 1, a, Rational(floor_rational(a)));
  }

  const Rational last_start = pts.empty() ? Rational(0) : pts.back();
  add("last piece covers [1/2, 1]", last_start <= Rational(1, 2), last_start,
      Rational(1, 2));
  const Rational first_end = pts.empty() ? Rational(1) : pts.front();
  add("first piece covers [0, 1/(1+lcm)]", first_end >= lcm_floor, first_end,
      lcm_floor);
  return report;
}

Rational product_formula_rhs(const Rational& kappa_g, const Rational& kappa_h,
                             int deg_g, int deg_h, int dist_x, int dist_y) {
  if (deg_g < 0 || deg_h < 0 || deg_g + deg_h == 0)
    fail("TooSmall", "product formula needs positive total degree");
  if (dist_x < 0 || dist_y < 0)
    fail("IndexOutOfRange", "factor distances cannot be negative");
  if (dist_x == 0 && dist_y == 0)
    fail("BothDistancesZero", "product formula needs distinct product vertices");
  const Rational numer = Rational(deg_g) * dist_x * kappa_g +
                         Rational(deg_h) * dist_y * kappa_h;
  return numer / (Rational(deg_g + deg_h) * (dist_x + dist_y));
}

Rational bonnet_myers_diameter_bound(const Rational& kappa, const Rational& p) {
  if (p < 0 || p >= 1)
    fail("BadIdleness", "distance bound needs idleness in [0,1), got " +
                            format_rational(p));
  if (kappa <= 0)
    fail("NonPositiveKappa",
         "distance bound needs kappa > 0, got " + format_rational(kappa));
  return 2 * (1 - p) / kappa;
}

Int optimal_potential_gap(const Graph& g, const DistanceMatrix& dist, int x,
                          int y, const Rational& p) {
  require_distinct_reachable(dist, x, y);
  if (dist(x, y) < 2)
    fail("DistanceTooSmall", "potential gap needs d(x,y) >= 2");
  if (p <= 0 || p > 1)
    fail("BadIdleness", "potential gap needs idleness in (0,1]");
  const KappaResult res = kappa_p_certified(g, dist, x, y, p);
  const Potential integral = integerize_potential(g, dist, res.certificate);
  return numerator(Rational(integral.values.at(x) - integral.values.at(y)));
}

std::string profile_to_json(const IdlenessProfile& profile) {
  nlohmann::ordered_json doc;
  doc["delta"] = profile.delta;
  doc["c"] = {format_rational(profile.c_lo), format_rational(profile.c_mid),
              format_rational(profile.c_hi)};
  doc["critical_points"] = nlohmann::ordered_json::array();
  std::vector<Rational> pts = critical_points(profile);
  for (const Rational& p : pts) doc["critical_points"].push_back(format_rational(p));

  std::vector<Rational> bounds = {0};
  bounds.insert(bounds.end(), pts.begin(), pts.end());
  bounds.push_back(1);
  doc["pieces"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const Rational mid = (bounds[i] + bounds[i + 1]) / 2;
    // Active line at the segment midpoint; unique because an argmax tie
    // strictly inside a segment would be a breakpoint.
    int best_j = profile.delta - 2;
    Rational best = mid * best_j + (1 - mid) * profile.c_lo;
    const std::pair<int, Rational> others[] = {
        {profile.delta - 1, profile.c_mid}, {profile.delta, profile.c_hi}};
    for (const auto& [j, c] : others) {
      const Rational f = mid * j + (1 - mid) * c;
      if (f > best) best = f, best_j = j;
    }
    const Rational c = best_j == profile.delta - 2   ? profile.c_lo
                       : best_j == profile.delta - 1 ? profile.c_mid
                                                     : profile.c_hi;
    nlohmann::ordered_json piece;
    piece["from"] = format_rational(bounds[i]);
    piece["to"] = format_rational(bounds[i + 1]);
    piece["slope"] = format_rational((c - best_j) / profile.delta);
    piece["intercept"] = format_rational(1 - c / profile.delta);
    doc["pieces"].push_back(piece);
  }
  return doc.dump();
}

}  // namespace orc
