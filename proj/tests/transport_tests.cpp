#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "orc/errors.hpp"
#include "orc/generators.hpp"
#include "orc/graph.hpp"
#include "orc/measure.hpp"
#include "orc/random_graphs.hpp"
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

}  // namespace

TEST_CASE("measures merge duplicates and demand unit mass") {
  Measure m = Measure::from_masses({{1, Rational(1, 2)}, {1, Rational(1, 4)},
                                    {0, Rational(1, 4)}});
  CHECK(m.at(1) == Rational(3, 4));
  CHECK(m.at(0) == Rational(1, 4));
  CHECK(m.at(5) == Rational(0));
  CHECK(code_of([] { Measure::from_masses({{0, Rational(1)}, {1, Rational(1, 2)}}); }) ==
        "ParseError");
  CHECK(code_of([] { Measure::from_masses({{0, Rational(1, 2)}, {1, Rational(-1, 2)},
                                           {2, Rational(1)}}); }) == "ParseError");
  CHECK(code_of([] { Measure::from_masses({{-1, Rational(1)}}); }) == "IndexOutOfRange");
}

TEST_CASE("lazy measures spread (1-p)/deg over neighbors") {
  Graph g = gen_basic(BasicKind::kPath, 3);
  Measure half = lazy_measure(g, 1, Rational(1, 2));
  CHECK(half.at(1) == Rational(1, 2));
  CHECK(half.at(0) == Rational(1, 4));
  CHECK(half.at(2) == Rational(1, 4));

  Measure spread = lazy_measure(g, 1, Rational(0));
  CHECK(spread.at(1) == Rational(0));
  CHECK(spread.masses().size() == 2);

  Measure stay = lazy_measure(g, 0, Rational(1));
  CHECK(stay.at(0) == Rational(1));
  CHECK(stay.masses().size() == 1);

  CHECK(code_of([&] { lazy_measure(g, 0, Rational(3, 2)); }) == "BadIdleness");
  CHECK(code_of([&] { lazy_measure(g, 7, Rational(0)); }) == "IndexOutOfRange");
  Graph isolated(2, {});
  CHECK(code_of([&] { lazy_measure(isolated, 0, Rational(1, 2)); }) == "IsolatedVertex");
  CHECK(lazy_measure(isolated, 0, Rational(1)).at(0) == Rational(1));
}

TEST_CASE("w1 between Diracs is the distance") {
  Graph g = gen_basic(BasicKind::kPath, 4);
  auto dm = all_pairs_distances(g);
  Measure a = Measure::from_masses({{0, Rational(1)}});
  Measure b = Measure::from_masses({{3, Rational(1)}});
  auto cert = w1(g, dm, a, b);
  CHECK(cert.value == Rational(3));
  REQUIRE(cert.plan.entries.size() == 1);
  CHECK(cert.plan.entries.begin()->first == std::pair<int, int>{0, 3});
  CHECK(cert.plan.entries.begin()->second == Rational(1));
  CHECK(cert.potential.values.at(3) == Rational(0));
  CHECK(cert.potential.values.at(0) == Rational(3));
  CHECK(check_certificate(g, dm, cert).all_ok());
}

TEST_CASE("w1 on the antipodal C6 pair without idleness") {
  Graph g = gen_basic(BasicKind::kCycle, 6);
  auto dm = all_pairs_distances(g);
  auto cert = w1(g, dm, lazy_measure(g, 0, Rational(0)), lazy_measure(g, 3, Rational(0)));
  CHECK(cert.value == Rational(1));
  CHECK(check_certificate(g, dm, cert).all_ok());
}

TEST_CASE("w1 of identical measures is zero with an empty plan") {
  Graph g = gen_basic(BasicKind::kCycle, 5);
  auto dm = all_pairs_distances(g);
  Measure mu = lazy_measure(g, 2, Rational(1, 3));
  auto cert = w1(g, dm, mu, mu);
  CHECK(cert.value == Rational(0));
  CHECK(cert.plan.entries.size() == cert.source.masses().size());
  CHECK(check_certificate(g, dm, cert).all_ok());
}

TEST_CASE("w1 requires a common component") {
  Graph g(4, {{0, 1}, {2, 3}});
  auto dm = all_pairs_distances(g);
  Measure a = Measure::from_masses({{0, Rational(1)}});
  Measure b = Measure::from_masses({{2, Rational(1)}});
  CHECK(code_of([&] { w1(g, dm, a, b); }) == "DisconnectedSupports");
}

TEST_CASE("solver agrees with the enumeration oracle on fixed graphs") {
  for (int n : {4, 5, 6}) {
    Graph g = gen_basic(BasicKind::kCycle, n);
    auto dm = all_pairs_distances(g);
    for (const Rational& p : {Rational(0), Rational(1, 3)}) {
      Measure mu = lazy_measure(g, 0, p);
      Measure nu = lazy_measure(g, n / 2, p);
      CHECK(w1(g, dm, mu, nu).value == oracle_w1_enum(g, dm, mu, nu));
    }
  }
  auto marked = gen_figure3_graph();
  auto dm = all_pairs_distances(marked.graph);
  Measure mu = lazy_measure(marked.graph, marked.x, Rational(1, 2));
  Measure nu = lazy_measure(marked.graph, marked.y, Rational(1, 2));
  CHECK(w1(marked.graph, dm, mu, nu).value ==
        oracle_w1_enum(marked.graph, dm, mu, nu));
}

TEST_CASE("oracle rejects components above twelve vertices") {
  Graph g = gen_basic(BasicKind::kPath, 13);
  auto dm = all_pairs_distances(g);
  Measure a = Measure::from_masses({{0, Rational(1)}});
  Measure b = Measure::from_masses({{12, Rational(1)}});
  CHECK(code_of([&] { oracle_w1_enum(g, dm, a, b); }) == "TooLargeForOracle");
}

TEST_CASE("certificate checker catches tampering") {
  Graph g = gen_basic(BasicKind::kCycle, 6);
  auto dm = all_pairs_distances(g);
  auto cert = w1(g, dm, lazy_measure(g, 0, Rational(1, 4)),
                 lazy_measure(g, 3, Rational(1, 4)));
  REQUIRE(check_certificate(g, dm, cert).all_ok());

  auto wrong_value = cert;
  wrong_value.value += 1;
  CHECK(!check_certificate(g, dm, wrong_value).all_ok());

  auto wrong_plan = cert;
  wrong_plan.plan.entries.begin()->second += Rational(1, 100);
  CHECK(!check_certificate(g, dm, wrong_plan).all_ok());

  auto wrong_potential = cert;
  wrong_potential.potential.values.begin()->second += 10;
  CHECK(!check_certificate(g, dm, wrong_potential).all_ok());
}

TEST_CASE("integerized potentials stay optimal") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_connected_graph(rng, 9);
    auto dm = all_pairs_distances(g);
    const int n = g.vertex_count();
    int x = static_cast<int>(rng() % n);
    int y = x;
    while (y == x) y = static_cast<int>(rng() % n);
    auto cert = w1(g, dm, lazy_measure(g, x, Rational(1, 3)),
                   lazy_measure(g, y, Rational(1, 3)));
    Potential integral = integerize_potential(g, dm, cert);
    for (const auto& [v, val] : integral.values) CHECK(is_integer(val));
    auto rounded = cert;
    rounded.potential = integral;
    CHECK(check_certificate(g, dm, rounded).all_ok());
  }
}

TEST_CASE("integerize rejects non-optimal certificates") {
  Graph g = gen_basic(BasicKind::kPath, 4);
  auto dm = all_pairs_distances(g);
  auto cert = w1(g, dm, Measure::from_masses({{0, Rational(1)}}),
                 Measure::from_masses({{3, Rational(1)}}));
  cert.potential.values.at(0) += Rational(1, 2);
  CHECK(code_of([&] { integerize_potential(g, dm, cert); }) == "NotOptimalInput");
}

TEST_CASE("certificates serialize with sorted exact entries") {
  Graph g = gen_basic(BasicKind::kPath, 4);
  auto dm = all_pairs_distances(g);
  auto cert = w1(g, dm, Measure::from_masses({{0, Rational(1)}}),
                 Measure::from_masses({{3, Rational(1)}}));
  const std::string text = certificate_to_json(cert);
  CHECK(text.find("\"value\":\"3/1\"") != std::string::npos);
  CHECK(text.find("[0,3,\"1/1\"]") != std::string::npos);
  CHECK(text.find("\"potential\":[[0,\"3/1\"]") != std::string::npos);
}
