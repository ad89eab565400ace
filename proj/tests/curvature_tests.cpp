#include <functional>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "orc/curvature.hpp"
#include "orc/errors.hpp"
#include "orc/generators.hpp"
#include "orc/graph.hpp"
#include "orc/measure.hpp"
#include "orc/rational.hpp"
#include "orc/transport.hpp"

using namespace orc;

namespace {

std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

// F(phi) = average of phi over N(x) minus average over N(y).
Rational transfer_value(const Graph& g, const std::map<int, Int>& phi, int x, int y) {
  Rational fx(0), fy(0);
  for (int w : g.neighbors(x)) fx += Rational(phi.at(w));
  for (int w : g.neighbors(y)) fy += Rational(phi.at(w));
  return fx / g.degree(x) - fy / g.degree(y);
}

bool is_lipschitz(const Graph& g, const std::map<int, Int>& phi) {
  for (const auto& [u, v] : g.edges()) {
    Int d = phi.at(u) - phi.at(v);
    if (d > 1 || d < -1) return false;
  }
  return true;
}

// Exhaustive c_j for small graphs: every integer potential with phi(y) = 0,
// phi(x) = j, all values in [-range, range], edge differences at most 1.
Rational brute_force_cj(const Graph& g, int x, int y, int j, int range) {
  const int n = g.vertex_count();
  std::vector<Int> phi(n, 0);
  bool found = false;
  Rational best(0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::map<int, Int> as_map;
      for (int u = 0; u < n; ++u) as_map[u] = phi[u];
      if (!is_lipschitz(g, as_map)) return;
      Rational f = transfer_value(g, as_map, x, y);
      if (!found || f > best) best = f, found = true;
      return;
    }
    if (v == x) {
      phi[v] = j;
      rec(v + 1);
      return;
    }
    if (v == y) {
      phi[v] = 0;
      rec(v + 1);
      return;
    }
    for (int val = -range; val <= range; ++val) {
      phi[v] = val;
      rec(v + 1);
    }
  };
  rec(0);
  REQUIRE(found);
  return best;
}

}  // namespace

TEST_CASE("curvature of cycles") {
  Graph c6 = gen_basic(BasicKind::kCycle, 6);
  auto dm = all_pairs_distances(c6);
  for (const Rational& p : {Rational(0), Rational(1, 2), Rational(1)}) {
    CHECK(kappa_p(c6, dm, 0, 1, p) == Rational(0));
  }
  CHECK(kappa_p(c6, dm, 0, 3, Rational(0)) == Rational(2, 3));
  CHECK(kappa_lly(c6, dm, 0, 1) == Rational(0));

  auto prof = idleness_profile(c6, dm, 0, 3);
  for (Rational p(0); p <= 1; p += Rational(1, 10)) {
    CHECK(evaluate_profile(prof, p) == kappa_p(c6, dm, 0, 3, p));
  }
}

TEST_CASE("antipodal C4 pair has identical neighborhoods") {
  Graph c4 = gen_basic(BasicKind::kCycle, 4);
  auto dm = all_pairs_distances(c4);
  auto prof = idleness_profile(c4, dm, 0, 2);
  CHECK(prof.c_lo == Rational(0));
  CHECK(prof.c_mid == Rational(0));
  CHECK(prof.c_hi == Rational(0));
  CHECK(critical_points(prof).empty());
  for (const Rational& p : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
    CHECK(kappa_p(c4, dm, 0, 2, p) == Rational(1) - p);
  }
  CHECK(kappa_lly(c4, dm, 0, 2) == Rational(1));
}

TEST_CASE("pinned supremum matches brute force") {
  Graph c5 = gen_basic(BasicKind::kCycle, 5);
  auto dm5 = all_pairs_distances(c5);
  for (int j = -2; j <= 2; ++j) {
    CHECK(potential_sup_cj(c5, dm5, 0, 2, j) == brute_force_cj(c5, 0, 2, j, 2));
  }

  Graph p5 = gen_basic(BasicKind::kPath, 5);
  auto dmp = all_pairs_distances(p5);
  for (int j = 2; j <= 4; ++j) {
    CHECK(potential_sup_cj(p5, dmp, 0, 4, j) == brute_force_cj(p5, 0, 4, j, 4));
  }

  auto marked = gen_figure3_graph();
  auto dmf = all_pairs_distances(marked.graph);
  const int x = *marked.graph.vertex_by_label("x");
  const int y = *marked.graph.vertex_by_label("y");
  for (int j = 0; j <= 2; ++j) {
    CHECK(potential_sup_cj(marked.graph, dmf, x, y, j) ==
          brute_force_cj(marked.graph, x, y, j, 3));
  }
}

TEST_CASE("pinned supremum returns a feasible attaining witness") {
  auto marked = gen_family(1, 1, 0);
  const Graph& g = marked.graph;
  auto dm = all_pairs_distances(g);
  for (int j = 1; j <= 3; ++j) {
    std::map<int, Int> witness;
    Rational c = potential_sup_cj(g, dm, marked.x, marked.y, j, &witness);
    CHECK(witness.at(marked.x) - witness.at(marked.y) == j);
    CHECK(is_lipschitz(g, witness));
    CHECK(transfer_value(g, witness, marked.x, marked.y) == c);
  }
}

TEST_CASE("family potentials from the construction attain the constants") {
  auto marked = gen_family(1, 1, 1);
  const Graph& g = marked.graph;
  auto dm = all_pairs_distances(g);
  auto at = [&](const std::string& label) { return *g.vertex_by_label(label); };

  // Hand-checked optimal potentials for G(1,1,1), pinned to gaps 1, 2, 3.
  const std::map<std::string, int> phi1 = {
      {"x", 1},     {"y", 0},  {"x0", 0},    {"x1", 2},    {"y0", -1},
      {"y1", 1},    {"x'1", 2}, {"v1", 1},   {"w1", 0},    {"y'1", -1},
      {"x''1", 2},  {"z1", 1}, {"y''1", 0},  {"x'''1", 1}, {"y'''1", 0}};
  const std::map<std::string, int> phi2 = {
      {"x", 2},     {"y", 0},  {"x0", 1},    {"x1", 2},    {"y0", 0},
      {"y1", 1},    {"x'1", 2}, {"v1", 1},   {"w1", 0},    {"y'1", 0},
      {"x''1", 2},  {"z1", 1}, {"y''1", 0},  {"x'''1", 1}, {"y'''1", 0}};
  const std::map<std::string, int> phi3 = {
      {"x", 3},     {"y", 0},  {"x0", 2},    {"x1", 2},    {"y0", 1},
      {"y1", 1},    {"x'1", 2}, {"v1", 1},   {"w1", 1},    {"y'1", 1},
      {"x''1", 2},  {"z1", 1}, {"y''1", 1},  {"x'''1", 2}, {"y'''1", 1}};

  auto prof = idleness_profile(g, dm, marked.x, marked.y);
  const std::pair<const std::map<std::string, int>*, Rational> cases[] = {
      {&phi1, prof.c_lo}, {&phi2, prof.c_mid}, {&phi3, prof.c_hi}};
  int gap = 1;
  for (const auto& [phi_labels, expected] : cases) {
    std::map<int, Int> phi;
    for (const auto& [label, value] : *phi_labels) phi[at(label)] = value;
    REQUIRE(static_cast<int>(phi.size()) == g.vertex_count());
    CHECK(is_lipschitz(g, phi));
    CHECK(phi.at(marked.x) - phi.at(marked.y) == gap);
    CHECK(transfer_value(g, phi, marked.x, marked.y) == expected);
    ++gap;
  }
  CHECK(prof.c_lo == Rational(8, 5));
  CHECK(prof.c_mid == Rational(7, 5));
  CHECK(prof.c_hi == Rational(1));
}

TEST_CASE("family transport costs at the breakpoints") {
  auto marked = gen_family(1, 1, 1);
  const Graph& g = marked.graph;
  auto dm = all_pairs_distances(g);
  auto w1_at = [&](const Rational& p) {
    return w1(g, dm, lazy_measure(g, marked.x, p), lazy_measure(g, marked.y, p)).value;
  };
  CHECK(w1_at(Rational(0)) == Rational(8, 5));
  CHECK(w1_at(Rational(1, 6)) == Rational(3, 2));
  CHECK(w1_at(Rational(2, 7)) == Rational(11, 7));
  CHECK(w1_at(Rational(1, 2)) == Rational(2));

  CHECK(kappa_p(g, dm, marked.x, marked.y, Rational(0)) == Rational(7, 15));
  CHECK(kappa_p(g, dm, marked.x, marked.y, Rational(1, 2)) == Rational(1, 3));
  CHECK(kappa_lly(g, dm, marked.x, marked.y) == Rational(2, 3));
}

TEST_CASE("profiles expose breakpoints in closed form") {
  auto marked = gen_family(1, 1, 0);
  auto dm = all_pairs_distances(marked.graph);
  auto prof = idleness_profile(marked.graph, dm, marked.x, marked.y);
  CHECK(critical_points(prof) == std::vector<Rational>{Rational(1, 5), Rational(1, 3)});

  // n = 0 merges the two candidates into one genuine breakpoint.
  auto merged = gen_family(2, 0, 1);
  auto dm2 = all_pairs_distances(merged.graph);
  auto prof2 = idleness_profile(merged.graph, dm2, merged.x, merged.y);
  CHECK(prof2.p1 == prof2.p2);
  CHECK(critical_points(prof2).size() == 1);

  // m = 0 pushes the first candidate to zero, leaving only the second.
  auto short_first = gen_family(0, 1, 0);
  auto dm3 = all_pairs_distances(short_first.graph);
  auto prof3 = idleness_profile(short_first.graph, dm3, short_first.x, short_first.y);
  CHECK(prof3.p1 == Rational(0));
  CHECK(critical_points(prof3) == std::vector<Rational>{Rational(1, 4)});
}

TEST_CASE("bound report certifies the chain and the cap") {
  auto marked = gen_family(1, 1, 1);
  auto dm = all_pairs_distances(marked.graph);
  auto report = check_critical_bounds(idleness_profile(marked.graph, dm, marked.x, marked.y));
  CHECK(report.all_pass());
  CHECK(report.checks.size() >= 5);
}

TEST_CASE("sampling reconstruction matches the closed form") {
  Graph c6 = gen_basic(BasicKind::kCycle, 6);
  auto dm = all_pairs_distances(c6);
  auto prof = idleness_profile(c6, dm, 0, 3);
  PiecewiseLinear pl = reconstruct_by_sampling(c6, dm, 0, 3);
  for (Rational p(0); p <= 1; p += Rational(1, 12)) {
    CHECK(pl(p) == evaluate_profile(prof, p));
  }
  std::vector<Rational> interior(pl.breakpoints().begin() + 1, pl.breakpoints().end() - 1);
  CHECK(interior == critical_points(prof));
}

TEST_CASE("sampling reconstruction works for adjacent pairs") {
  auto marked = gen_figure3_graph();
  const Graph& g = marked.graph;
  auto dm = all_pairs_distances(g);
  const int x = *g.vertex_by_label("x"), w = *g.vertex_by_label("w");
  PiecewiseLinear pl = reconstruct_by_sampling(g, dm, x, w);
  CHECK(pl(Rational(0)) == Rational(0));
  CHECK(pl(Rational(1, 2)) == Rational(1, 2));
  CHECK(pl(Rational(1)) == Rational(0));
  for (Rational p(0); p <= 1; p += Rational(1, 10)) {
    CHECK(pl(p) == kappa_p(g, dm, x, w, p));
  }

  Graph c4 = gen_basic(BasicKind::kCycle, 4);
  auto dm4 = all_pairs_distances(c4);
  PiecewiseLinear straight = reconstruct_by_sampling(c4, dm4, 0, 2);
  CHECK(straight.piece_count() == 1);
  CHECK(straight.slope(0) == Rational(-1));
}

TEST_CASE("product formula combines factor curvatures") {
  Graph c4 = gen_basic(BasicKind::kCycle, 4);
  Graph p = cartesian_product(c4, c4);
  auto dm = all_pairs_distances(p);
  auto dc = all_pairs_distances(c4);

  const Rational half(1, 2);
  Rational k_factor = kappa_p(c4, dc, 0, 1, half);
  CHECK(kappa_p(p, dm, 0 * 4 + 0, 1 * 4 + 1, half) ==
        product_formula_rhs(k_factor, k_factor, 2, 2, 1, 1));

  // A factor at distance zero is ignored no matter what is passed for it.
  Rational with_zero = product_formula_rhs(Rational(999), k_factor, 2, 2, 0, 1);
  CHECK(with_zero == product_formula_rhs(Rational(0), k_factor, 2, 2, 0, 1));
  CHECK(kappa_p(p, dm, 0 * 4 + 0, 0 * 4 + 1, half) == with_zero);

  CHECK(code_of([&] { product_formula_rhs(Rational(0), Rational(0), 2, 2, 0, 0); }) ==
        "BothDistancesZero");
}

TEST_CASE("distance bound from positive curvature") {
  CHECK(bonnet_myers_diameter_bound(Rational(1, 6), Rational(1, 2)) == Rational(6));
  CHECK(bonnet_myers_diameter_bound(Rational(1), Rational(0)) == Rational(2));
  CHECK(code_of([] { bonnet_myers_diameter_bound(Rational(0), Rational(1, 2)); }) ==
        "NonPositiveKappa");
  CHECK(code_of([] { bonnet_myers_diameter_bound(Rational(1, 2), Rational(1)); }) ==
        "BadIdleness");
}

TEST_CASE("optimal potential gap sits in the window and tightens late") {
  Graph c6 = gen_basic(BasicKind::kCycle, 6);
  auto dm = all_pairs_distances(c6);
  for (const Rational& p : {Rational(3, 5), Rational(3, 4), Rational(1)}) {
    CHECK(optimal_potential_gap(c6, dm, 0, 3, p) == 3);
  }
  Int early = optimal_potential_gap(c6, dm, 0, 3, Rational(1, 10));
  CHECK(early >= 1);
  CHECK(early <= 3);
  CHECK(code_of([&] { optimal_potential_gap(c6, dm, 0, 3, Rational(0)); }) ==
        "BadIdleness");
  CHECK(code_of([&] { optimal_potential_gap(c6, dm, 0, 1, Rational(1, 2)); }) ==
        "DistanceTooSmall");
}

TEST_CASE("profile JSON carries exact pieces") {
  auto marked = gen_family(1, 1, 0);
  auto dm = all_pairs_distances(marked.graph);
  auto prof = idleness_profile(marked.graph, dm, marked.x, marked.y);
  auto doc = nlohmann::ordered_json::parse(profile_to_json(prof));
  CHECK(doc["delta"] == 3);
  CHECK(doc["c"] == nlohmann::ordered_json({"7/4", "3/2", "1/1"}));
  CHECK(doc["critical_points"] == nlohmann::ordered_json({"1/5", "1/3"}));
  REQUIRE(doc["pieces"].size() == 3);
  CHECK(doc["pieces"][0]["from"] == "0/1");
  CHECK(doc["pieces"][0]["to"] == "1/5");
  CHECK(doc["pieces"][0]["slope"] == "1/4");
  CHECK(doc["pieces"][0]["intercept"] == "5/12");
  CHECK(doc["pieces"][2]["to"] == "1/1");
  CHECK(doc["pieces"][2]["slope"] == "-2/3");
  CHECK(doc["pieces"][2]["intercept"] == "2/3");
}

TEST_CASE("curvature rejects malformed pairs") {
  Graph c6 = gen_basic(BasicKind::kCycle, 6);
  auto dm = all_pairs_distances(c6);
  CHECK(code_of([&] { kappa_p(c6, dm, 2, 2, Rational(0)); }) == "DistanceTooSmall");
  CHECK(code_of([&] { kappa_p(c6, dm, 0, 9, Rational(0)); }) == "IndexOutOfRange");
  CHECK(code_of([&] { kappa_p(c6, dm, 0, 3, Rational(2)); }) == "BadIdleness");
  CHECK(code_of([&] { idleness_profile(c6, dm, 0, 1); }) == "DistanceTooSmall");
  CHECK(code_of([&] { potential_sup_cj(c6, dm, 0, 3, 4); }) == "InfeasiblePin");

  Graph split(4, {{0, 1}, {2, 3}});
  auto dms = all_pairs_distances(split);
  CHECK(code_of([&] { kappa_p(split, dms, 0, 2, Rational(0)); }) ==
        "DisconnectedSupports");
}

TEST_CASE("certified curvature carries a verifiable certificate") {
  auto marked = gen_family(1, 1, 1);
  auto dm = all_pairs_distances(marked.graph);
  auto res = kappa_p_certified(marked.graph, dm, marked.x, marked.y, Rational(1, 2));
  CHECK(res.kappa == Rational(1, 3));
  CHECK(check_certificate(marked.graph, dm, res.certificate).all_ok());
  CHECK(res.certificate.value == Rational(2));
}
