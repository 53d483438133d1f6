#include <doctest.h>

#include "edgepoly/enumerate.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/search.hpp"
#include "helpers.hpp"

using namespace edgepoly;
using ep_test::W;
using ep_test::hexagon_with_chord;

TEST_CASE("fixture searches reproduce the worked example weightings") {
  Graph g = hexagon_with_chord();
  auto ci = search_type_I(g);
  REQUIRE(ci.has_value());
  CHECK(ci->weights == W({-1, -1, 1, 1, -1, 1}));
  CHECK(ci->positive == std::vector<Edge>{{3, 4}});
  CHECK(ci->negative == std::vector<Edge>{{1, 2}});

  auto cii = search_type_II(g);
  REQUIRE(cii.has_value());
  CHECK(cii->weights == W({-1, 0, 0, 1, -1, 1}));
  CHECK(cii->positive == std::vector<Edge>{{3, 4}});
  CHECK(cii->negative == std::vector<Edge>{{1, 2}});
}

TEST_CASE("K4 is type I but not type II decomposable") {
  Graph k4 = complete_graph(4);
  auto ci = search_type_I(k4);
  REQUIRE(ci.has_value());
  CHECK(ci->weights == W({-1, -1, 1, 1}));
  CHECK(is_separating(k4, ci->weights) == Pattern::TypeI);
  CHECK_FALSE(search_type_II(k4).has_value());
}

TEST_CASE("C4 has both certificates") {
  Graph c4 = cycle_graph(4);
  auto ci = search_type_I(c4);
  REQUIRE(ci.has_value());
  CHECK(ci->weights == W({-1, -1, 1, 1}));
  auto cii = search_type_II(c4);
  REQUIRE(cii.has_value());
  CHECK(cii->weights == W({-1, 0, 0, 1}));
}

TEST_CASE("joined tri-pans admit no certificate of either type") {
  for (int n = 1; n <= 3; ++n) {
    Graph t = tri_pan(n);
    CHECK_FALSE(search_type_I(t).has_value());
    CHECK_FALSE(search_type_II(t).has_value());
  }
}

TEST_CASE("attaching a 4-cycle to K3 gives a type II certificate on the new vertices") {
  Graph g = attach_four_cycle(complete_graph(3), Edge(1, 2));
  auto cii = search_type_II(g);
  REQUIRE(cii.has_value());
  CHECK(cii->weights == W({0, 0, 0, -1, 1}));
  CHECK(cii->positive == std::vector<Edge>{{2, 5}});
  CHECK(cii->negative == std::vector<Edge>{{1, 4}});
}

TEST_CASE("searches reject disconnected graphs and oversized inputs") {
  Graph two = ep_test::disjoint_union({complete_graph(3), complete_graph(3)});
  CHECK_THROWS_AS(search_type_I(two), InputError);
  CHECK_THROWS_AS(search_type_II(two), InputError);
  CHECK_THROWS_AS(search_type_I(path_graph(65)), ResourceError);
  CHECK_THROWS_AS(search_type_II(path_graph(65)), ResourceError);
}

TEST_CASE("single-edge graphs are trivially indecomposable") {
  Graph k2 = path_graph(2);
  CHECK_FALSE(search_type_I(k2).has_value());
  CHECK_FALSE(search_type_II(k2).has_value());
}

namespace {

std::optional<Weighting> oracle_lexmin(const std::vector<OracleEntry>& entries, Pattern p) {
  for (const OracleEntry& e : entries)
    if (e.pattern == p) return e.weights;  // entries come in ascending lexicographic order
  return std::nullopt;
}

}  // namespace

TEST_CASE("searches agree with the oracle on every connected graph up to 5 vertices") {
  for (int n = 2; n <= 5; ++n) {
    ConnectedGraphStream stream(n);
    while (auto g = stream.next()) {
      auto entries = brute_force_certificates_serial(*g);
      auto ci = search_type_I(*g);
      auto cii = search_type_II(*g);
      auto oi = oracle_lexmin(entries, Pattern::TypeI);
      auto oii = oracle_lexmin(entries, Pattern::TypeII);
      CAPTURE(n);
      CAPTURE(stream.last_mask());
      // existence must match, and the reported certificate is the smallest
      REQUIRE(ci.has_value() == oi.has_value());
      REQUIRE(cii.has_value() == oii.has_value());
      if (ci) REQUIRE(ci->weights == *oi);
      if (cii) REQUIRE(cii->weights == *oii);
    }
  }
}

TEST_CASE("sign-flip symmetry of valid weightings") {
  auto check_graph = [](const Graph& g) {
    for (const OracleEntry& e : brute_force_certificates_serial(g)) {
      Weighting flipped = e.weights;
      for (Weight& w : flipped) w = static_cast<Weight>(-w);
      SeparationCheck c = check_separating(g, flipped);
      REQUIRE(c.general_valid);
      REQUIRE(c.pattern == e.pattern);
    }
  };
  // every connected graph up to 5 vertices, plus 6-vertex fixtures
  for (int n = 2; n <= 5; ++n) {
    ConnectedGraphStream stream(n);
    while (auto g = stream.next()) check_graph(*g);
  }
  check_graph(hexagon_with_chord());
  check_graph(attach_four_cycle(complete_graph(3), Edge(1, 2)));
}

TEST_CASE("attachment law: attaching a 4-cycle anywhere makes any small graph type II decomposable") {
  for (int n = 2; n <= 5; ++n) {
    ConnectedGraphStream stream(n);
    while (auto g = stream.next()) {
      for (const Edge& e : g->edges()) {
        Graph attached = attach_four_cycle(*g, e);
        CAPTURE(n);
        CAPTURE(stream.last_mask());
        CAPTURE(e.u);
        CAPTURE(e.v);
        REQUIRE(search_type_II(attached).has_value());
      }
    }
  }
}
