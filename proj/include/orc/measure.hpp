#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orc/graph.hpp"
#include "orc/rational.hpp"

namespace orc {

// Finitely supported probability measure on graph vertices. Support is kept
// sorted (std::map) so every downstream iteration is deterministic; masses
// are strictly positive and sum to exactly 1.
class Measure {
 public:
  static Measure from_masses(const std::vector<std::pair<int, Rational>>& masses);

  const std::map<int, Rational>& masses() const { return masses_; }
  Rational at(int v) const;
  bool operator==(const Measure& other) const = default;

 private:
  std::map<int, Rational> masses_;
};

// Lazy random-walk step measure: mass p stays at x, the rest spreads
// uniformly over the neighbors. Requires p in [0,1]; requires deg(x) > 0
// unless p = 1 (throws Error("IsolatedVertex") / Error("BadIdleness")).
Measure lazy_measure(const Graph& g, int x, const Rational& p);

}  // namespace orc
