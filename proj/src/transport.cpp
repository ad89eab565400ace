#include "orc/transport.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "orc/errors.hpp"
#include "orc/min_cost_flow.hpp"

namespace orc {

namespace {

// Sorted support vertices of both measures, checked to lie in one component.
// Returns the full sorted component vertex list.
std::vector<int> common_component(const DistanceMatrix& dist, const Measure& mu,
                                  const Measure& nu) {
  const int ref = mu.masses().begin()->first;
  for (const auto* m : {&mu, &nu}) {
    for (const auto& [v, mass] : m->masses()) {
      if (!dist.reachable(ref, v))
        fail("DisconnectedSupports",
             "support vertices " + std::to_string(ref) + " and " +
                 std::to_string(v) + " lie in different components");
    }
  }
  std::vector<int> comp;
  for (int v = 0; v < dist.vertex_count(); ++v) {
    if (dist.reachable(ref, v)) comp.push_back(v);
  }
  return comp;
}

Int mass_denominator_lcm(const Measure& m) {
  Int l = 1;
  for (const auto& [v, mass] : m.masses()) l = lcm(l, denominator(mass));
  return l;
}

Rational dual_objective(const Potential& phi, const Measure& mu, const Measure& nu) {
  Rational obj = 0;
  for (const auto& [v, mass] : mu.masses()) obj += phi.values.at(v) * mass;
  for (const auto& [v, mass] : nu.masses()) obj -= phi.values.at(v) * mass;
  return obj;
}

Rational plan_cost(const TransportPlan& plan, const DistanceMatrix& dist) {
  Rational cost = 0;
  for (const auto& [uv, mass] : plan.entries) cost += mass * dist(uv.first, uv.second);
  return cost;
}

}  // namespace

W1Certificate w1(const Graph& g, const DistanceMatrix& dist, const Measure& mu,
                 const Measure& nu, std::optional<int> anchor) {
  if (g.vertex_count() != dist.vertex_count())
    throw std::logic_error("distance matrix does not match graph");
  const std::vector<int> comp = common_component(dist, mu, nu);
  const int anchor_v = anchor.value_or(nu.masses().begin()->first);
  if (!dist.reachable(comp.front(), anchor_v))
    fail("DisconnectedSupports", "anchor vertex lies outside the component");

  W1Certificate cert;
  cert.source = mu;
  cert.target = nu;

  if (mu == nu) {
    // Mass stays put; the diagonal plan keeps the marginal checks honest.
    cert.value = 0;
    for (const auto& [v, mass] : mu.masses()) cert.plan.entries[{v, v}] = mass;
    for (int v : comp) cert.potential.values[v] = 0;
    return cert;
  }

  std::vector<int> sources, sinks;
  for (const auto& [v, mass] : mu.masses()) sources.push_back(v);
  for (const auto& [v, mass] : nu.masses()) sinks.push_back(v);
  const int ks = static_cast<int>(sources.size());
  const int kt = static_cast<int>(sinks.size());

  const Int scale = lcm(mass_denominator_lcm(mu), mass_denominator_lcm(nu));
  // Bipartite network over support copies; arc capacities sit above the
  // total supply so no transport arc ever saturates and every flow-carrying
  // arc stays dual-tight.
  MinCostFlow flow(ks + kt);
  std::vector<std::vector<int>> arc_id(ks, std::vector<int>(kt));
  for (int i = 0; i < ks; ++i) {
    for (int j = 0; j < kt; ++j) {
      arc_id[i][j] =
          flow.add_arc(i, ks + j, scale + 1, dist(sources[i], sinks[j]));
    }
  }
  std::vector<Int> supply(ks + kt);
  for (int i = 0; i < ks; ++i) {
    const Rational s = mu.at(sources[i]) * scale;
    supply[i] = numerator(s);
  }
  for (int j = 0; j < kt; ++j) {
    const Rational s = nu.at(sinks[j]) * scale;
    supply[ks + j] = -numerator(s);
  }
  const Int total_cost = flow.route_supplies(supply);
  cert.value = Rational(total_cost, scale);

  for (int i = 0; i < ks; ++i) {
    for (int j = 0; j < kt; ++j) {
      const Int f = flow.flow_on(arc_id[i][j]);
      if (f > 0) cert.plan.entries[{sources[i], sinks[j]}] = Rational(f, scale);
    }
  }

  // Kantorovich potential from the flow duals on the target copies,
  // propagated over the component by the distance envelope.
  std::vector<Int> phi_sink(kt);
  for (int j = 0; j < kt; ++j) phi_sink[j] = -flow.potential(ks + j);
  std::map<int, Int> phi;
  for (int w : comp) {
    Int best = dist(w, sinks[0]) + phi_sink[0];
    for (int j = 1; j < kt; ++j)
      best = std::min(best, Int(dist(w, sinks[j]) + phi_sink[j]));
    phi[w] = best;
  }
  const Int shift = phi.at(anchor_v);
  for (auto& [w, val] : phi) cert.potential.values[w] = Rational(val - shift);

  // Strong duality must hold exactly; anything else is a solver defect.
  if (plan_cost(cert.plan, dist) != cert.value ||
      dual_objective(cert.potential, mu, nu) != cert.value)
    throw std::logic_error("transport certificate failed self-check");
  return cert;
}

Potential integerize_potential(const Graph& g, const DistanceMatrix& dist,
                               const W1Certificate& cert) {
  (void)g;
  const auto& phi = cert.potential.values;
  auto defined_at = [&](int v) {
    if (phi.find(v) == phi.end())
      fail("NotOptimalInput", "potential undefined at vertex " + std::to_string(v));
  };

  // Complementary slackness on every plan entry.
  for (const auto& [uv, mass] : cert.plan.entries) {
    const auto& [u, v] = uv;
    if (mass <= 0) fail("NotOptimalInput", "nonpositive plan entry");
    defined_at(u);
    defined_at(v);
    if (!dist.reachable(u, v) || phi.at(u) - phi.at(v) != dist(u, v))
      fail("NotOptimalInput", "slackness fails on plan entry (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
  }

  // Marginals; without them objective preservation has no meaning.
  std::map<int, Rational> row, col;
  for (const auto& [uv, mass] : cert.plan.entries) {
    row[uv.first] += mass;
    col[uv.second] += mass;
  }
  if (row != cert.source.masses() || col != cert.target.masses())
    fail("NotOptimalInput", "plan marginals do not match the measures");
  for (const auto& [v, mass] : cert.source.masses()) defined_at(v);
  for (const auto& [v, mass] : cert.target.masses()) defined_at(v);

  // Fractional parts must agree on each component of the plan-support
  // graph; flooring then shifts each component by one common amount and the
  // slack arcs (zero plan mass) only gain slack.
  std::map<int, int> comp_root;
  std::function<int(int)> find = [&](int v) {
    auto it = comp_root.find(v);
    if (it == comp_root.end() || it->second == v) return v;
    return it->second = find(it->second);
  };
  for (const auto& [uv, mass] : cert.plan.entries) {
    const int ru = find(uv.first), rv = find(uv.second);
    if (ru != rv) comp_root[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::map<int, Rational> comp_frac;
  for (const auto& [uv, mass] : cert.plan.entries) {
    for (int v : {uv.first, uv.second}) {
      const Rational frac = phi.at(v) - Rational(floor_rational(phi.at(v)));
      auto [it, inserted] = comp_frac.emplace(find(v), frac);
      if (!inserted && it->second != frac)
        fail("NotOptimalInput",
             "fractional parts differ within a plan-support component");
    }
  }

  Potential out;
  for (const auto& [v, val] : phi) out.values[v] = Rational(floor_rational(val));
  return out;
}

Rational oracle_w1_enum(const Graph& g, const DistanceMatrix& dist,
                        const Measure& mu, const Measure& nu) {
  const std::vector<int> comp = common_component(dist, mu, nu);
  if (comp.size() > 12)
    fail("TooLargeForOracle", "component has " + std::to_string(comp.size()) +
                                  " vertices, oracle limit is 12");
  const int v0 = std::min(mu.masses().begin()->first, nu.masses().begin()->first);

  // Breadth-first order from the anchor so every vertex after the first has
  // an already-assigned neighbor constraining its value.
  std::vector<int> order;
  {
    std::vector<int> sorted_comp = comp;
    std::sort(sorted_comp.begin(), sorted_comp.end(),
              [&](int a, int b) { return dist(v0, a) < dist(v0, b) ||
                                         (dist(v0, a) == dist(v0, b) && a < b); });
    order = sorted_comp;
  }
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(dist.vertex_count(), -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<Rational> weight(n);
  for (int i = 0; i < n; ++i)
    weight[i] = mu.at(order[i]) - nu.at(order[i]);

  // Optimistic tail bound: |phi| is capped by the distance cone around v0.
  std::vector<Rational> tail(n + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    tail[i] = tail[i + 1] + abs(weight[i]) * dist(v0, order[i]);

  std::vector<int> phi(n, 0);
  Rational best;
  bool have_best = false;
  // phi[0] = 0: the objective is shift-invariant because both measures have
  // total mass 1.
  std::function<void(int, Rational)> search = [&](int i, Rational obj) {
    if (have_best && obj + tail[i] <= best) return;
    if (i == n) {
      if (!have_best || obj > best) best = obj, have_best = true;
      return;
    }
    const int v = order[i];
    int lo = -dist(v0, v), hi = dist(v0, v);
    for (int w : g.neighbors(v)) {
      if (pos[w] >= 0 && pos[w] < i) {
        lo = std::max(lo, phi[pos[w]] - 1);
        hi = std::min(hi, phi[pos[w]] + 1);
      }
    }
    for (int val = hi; val >= lo; --val) {  // high first: better bounds sooner
      phi[i] = val;
      search(i + 1, obj + weight[i] * val);
    }
  };
  search(1, Rational(0));
  if (n == 1) return 0;
  return best;
}

CertificateReport check_certificate(const Graph& g, const DistanceMatrix& dist,
                                    const W1Certificate& cert) {
  (void)g;
  CertificateReport report;
  auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };

  std::map<int, Rational> row, col;
  bool cost_ok = true;
  Rational cost = 0;
  for (const auto& [uv, mass] : cert.plan.entries) {
    const auto& [u, v] = uv;
    const std::string name = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (mass <= 0) flag("plan entry " + name + " is not positive");
    if (!dist.reachable(u, v)) {
      flag("plan entry " + name + " crosses components");
      cost_ok = false;
      continue;
    }
    row[u] += mass;
    col[v] += mass;
    cost += mass * dist(u, v);
  }
  if (row != cert.source.masses()) flag("plan row marginals differ from source measure");
  if (col != cert.target.masses()) flag("plan column marginals differ from target measure");
  if (cost_ok && cost != cert.value) flag("plan cost differs from value");

  const auto& phi = cert.potential.values;
  bool defined = true;
  auto need = [&](int v) {
    if (phi.find(v) == phi.end()) {
      flag("potential undefined at vertex " + std::to_string(v));
      defined = false;
    }
  };
  for (const auto& [v, mass] : cert.source.masses()) need(v);
  for (const auto& [v, mass] : cert.target.masses()) need(v);
  for (const auto& [uv, mass] : cert.plan.entries) need(uv.first), need(uv.second);
  if (!defined) return report;

  for (auto it = phi.begin(); it != phi.end(); ++it) {
    for (auto jt = std::next(it); jt != phi.end(); ++jt) {
      if (!dist.reachable(it->first, jt->first)) continue;
      const Rational gap = abs(it->second - jt->second);
      if (gap > dist(it->first, jt->first)) {
        flag("potential is not 1-Lipschitz on pair (" + std::to_string(it->first) +
             "," + std::to_string(jt->first) + ")");
      }
    }
  }

  Rational dual = 0;
  for (const auto& [v, mass] : cert.source.masses()) dual += phi.at(v) * mass;
  for (const auto& [v, mass] : cert.target.masses()) dual -= phi.at(v) * mass;
  if (dual != cert.value) flag("dual objective differs from value");

  for (const auto& [uv, mass] : cert.plan.entries) {
    if (!dist.reachable(uv.first, uv.second)) continue;
    if (phi.at(uv.first) - phi.at(uv.second) != dist(uv.first, uv.second)) {
      flag("complementary slackness fails on plan entry (" +
           std::to_string(uv.first) + "," + std::to_string(uv.second) + ")");
    }
  }
  return report;
}

std::string certificate_to_json(const W1Certificate& cert) {
  nlohmann::ordered_json doc;
  doc["value"] = format_rational(cert.value);
  doc["plan"] = nlohmann::ordered_json::array();
  for (const auto& [uv, mass] : cert.plan.entries)
    doc["plan"].push_back({uv.first, uv.second, format_rational(mass)});
  doc["potential"] = nlohmann::ordered_json::array();
  for (const auto& [v, val] : cert.potential.values)
    doc["potential"].push_back({v, format_rational(val)});
  return doc.dump();
}

}  // namespace orc
