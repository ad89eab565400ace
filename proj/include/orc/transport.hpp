#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "orc/graph.hpp"
#include "orc/measure.hpp"
#include "orc/rational.hpp"

namespace orc {

// Coupling of two measures; only strictly positive entries are stored.
// Keys (u,v) mean mass moved from u to v.
struct TransportPlan {
  std::map<std::pair<int, int>, Rational> entries;
};

// Kantorovich potential, defined on the connected component carrying the
// measures. 1-Lipschitz with respect to the graph metric.
struct Potential {
  std::map<int, Rational> values;
};

// Strong-duality witness for a Wasserstein-1 computation: the plan attains
// `value` and the potential proves no plan can do better. Construction in
// w1() verifies plan cost = value = dual objective exactly.
struct W1Certificate {
  Rational value;
  TransportPlan plan;
  Potential potential;
  Measure source;
  Measure target;
};

// Exact W1 between measures supported on a single connected component.
// Masses are scaled by their common denominator to an integral min-cost
// flow; the optimal flow's node potentials become the dual witness,
// extended to the whole component by the distance envelope
// phi(w) = min over target support of d(w,v) + phi(v), which preserves both
// 1-Lipschitzness and the dual objective. The potential is shifted so it
// vanishes at `anchor` (default: lowest-index vertex of the target
// support). Throws Error("DisconnectedSupports") when the supports do not
// share a component.
W1Certificate w1(const Graph& g, const DistanceMatrix& dist, const Measure& mu,
                 const Measure& nu, std::optional<int> anchor = std::nullopt);

// Floors an optimal potential to an integer-valued one attaining the same
// dual objective. Verifies complementary slackness of the input certificate
// and that fractional parts are constant on each connected component of the
// plan-support graph; throws Error("NotOptimalInput") otherwise.
Potential integerize_potential(const Graph& g, const DistanceMatrix& dist,
                               const W1Certificate& cert);

// Independent W1 oracle: maximizes the dual objective by depth-first
// enumeration of all integer 1-Lipschitz potentials on the component
// (anchored at the lowest-index support vertex, each value confined to the
// distance cone around the anchor). Exponential; guarded to components of
// at most 12 vertices via Error("TooLargeForOracle").
Rational oracle_w1_enum(const Graph& g, const DistanceMatrix& dist,
                        const Measure& mu, const Measure& nu);

// Re-derives every certificate condition from scratch: positive entries,
// exact marginals, plan cost, potential Lipschitzness, dual objective, and
// complementary slackness. all_ok() iff the certificate is a strong-duality
// witness.
struct CertificateReport {
  std::vector<std::string> violations;
  bool all_ok() const { return violations.empty(); }
};

CertificateReport check_certificate(const Graph& g, const DistanceMatrix& dist,
                                    const W1Certificate& cert);

// Certificate JSON: {"value": "num/den",
//                    "plan": [[u, v, "num/den"], ...],
//                    "potential": [[v, "num/den"], ...]}
// with plan entries sorted by (u,v) and potential entries by vertex.
std::string certificate_to_json(const W1Certificate& cert);

}  // namespace orc
