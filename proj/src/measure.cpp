#include "orc/measure.hpp"

#include <string>

#include "orc/errors.hpp"

namespace orc {

Measure Measure::from_masses(const std::vector<std::pair<int, Rational>>& masses) {
  Measure m;
  Rational total = 0;
  for (const auto& [v, mass] : masses) {
    if (v < 0) fail("IndexOutOfRange", "measure on negative vertex");
    if (mass <= 0) fail("ParseError", "measure masses must be positive");
    auto [it, inserted] = m.masses_.emplace(v, mass);
    if (!inserted) it->second += mass;
    total += mass;
  }
  if (total != 1) fail("ParseError", "measure masses must sum to 1");
  return m;
}

Rational Measure::at(int v) const {
  const auto it = masses_.find(v);
  return it == masses_.end() ? Rational(0) : it->second;
}

Measure lazy_measure(const Graph& g, int x, const Rational& p) {
  if (p < 0 || p > 1)
    fail("BadIdleness", "idleness must lie in [0,1], got " + format_rational(p));
  if (x < 0 || x >= g.vertex_count())
    fail("IndexOutOfRange", "vertex " + std::to_string(x));
  std::vector<std::pair<int, Rational>> masses;
  if (p > 0) masses.emplace_back(x, p);
  if (p < 1) {
    const int d = g.degree(x);
    if (d == 0)
      fail("IsolatedVertex", "vertex " + std::to_string(x) + " has no neighbors");
    const Rational share = (1 - p) / d;
    for (int w : g.neighbors(x)) masses.emplace_back(w, share);
  }
  return Measure::from_masses(masses);
}

}  // namespace orc
