#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orc::verify {

// One exact comparison inside a verification suite; expected/computed hold
// canonical renderings of both sides (rationals, counts, or value sets).
struct Check {
  std::string name;
  bool pass;
  std::string expected;
  std::string computed;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool all_pass() const;
  int failed_count() const;
};

inline constexpr std::uint64_t kDefaultSeed = 97;

// Closed-form family sweep: profile constants, critical points, and
// cross-method curvature values for fixed (m,n,k) triples.
SuiteResult family_constants();
// Degree-cap sharpness: k = 0 members attain the breakpoint upper bound.
SuiteResult family_sharpness();
// One family member, checked like family_constants (CLI --m/--n/--k).
SuiteResult family_single(int m, int n, int k);
// Both family parts; the CLI suite name "family".
SuiteResult family_suite();

// Hexagonal-tiling torus: regularity, girth, sphere-size stability, edge
// curvatures -(2/3)(1-p), and the two-valued distance-7 sphere.
SuiteResult hexagon_suite();

// Regular-tree balls: kappa_p = (4-2d)/(d*L) * (1-p) for depth-L pairs.
SuiteResult tree_suite();

// Cartesian products of regular graphs: direct curvature equals the
// closed-form combination of factor curvatures, including zero factor
// distance, plus the Lin-Lu-Yau variant.
SuiteResult product_suite(std::uint64_t seed);

// Solver-vs-enumeration W1 equality and exact potential integerization on
// 200 random connected graphs.
SuiteResult oracle_suite(std::uint64_t seed);

// Structural sweep on 300 random connected graphs, every pair at distance
// >= 2: chain inequalities, breakpoint form and caps, piece coverage,
// closed form vs direct solves vs sampling reconstruction, and the
// potential-gap window.
SuiteResult structure_suite(std::uint64_t seed);

// Some pair of every random connected graph is positively curved at
// p = 1/2, and the radius bound holds wherever curvature is positive.
SuiteResult positivity_suite(std::uint64_t seed);

// oracle + structure + positivity; the CLI suite name "bounds".
SuiteResult bounds_suite(std::uint64_t seed);

// The 5-vertex tree example: all Lin-Lu-Yau values and the radius bound.
SuiteResult figure3_suite();

}  // namespace orc::verify
