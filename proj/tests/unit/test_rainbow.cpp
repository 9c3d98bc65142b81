#include <doctest.h>

#include <algorithm>
#include <random>

#include "ncrainbow/coloring.hpp"
#include "ncrainbow/error.hpp"
#include "ncrainbow/group_catalog.hpp"
#include "ncrainbow/ncgraph.hpp"
#include "ncrainbow/rainbow.hpp"
#include "oracles.hpp"

using namespace ncrainbow;

namespace {

EdgeColoring colored(const Graph& g, Color count, std::vector<ColoredEdge> edges) {
  return EdgeColoring::from_edges(g, count, edges);
}

EdgeColoring monochrome(const Graph& g) {
  return EdgeColoring::from_function(g, 1, [](Edge) -> Color { return 1; });
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("rainbow path enumeration") {
  const Graph k2 = complete_graph(2);
  CHECK(enumerate_rainbow_paths(k2, monochrome(k2), 0, 1, 2) == std::vector<Path>{{0, 1}});

  // x = 0, y = 1, z = 2; xy = 1, xz = 1, zy = 2.
  const Graph k3 = complete_graph(3);
  const auto col = colored(k3, 2, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 2}});
  CHECK(enumerate_rainbow_paths(k3, col, 0, 1, 2) == std::vector<Path>{{0, 1}, {0, 2, 1}});

  const Graph p3 = path_graph(3);
  CHECK(enumerate_rainbow_paths(p3, monochrome(p3), 0, 2, 2).empty());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(2 + rng() % 7, rng);
    const Color colors = static_cast<Color>(1 + rng() % 4);
    const auto c = EdgeColoring::from_function(
        g, colors, [&](Edge) { return static_cast<Color>(1 + rng() % colors); });
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = x + 1; y < g.vertex_count(); ++y)
        CHECK(enumerate_rainbow_paths(g, c, x, y, colors) ==
              oracle::rainbow_paths(g, c, x, y, colors));
  }
}

TEST_CASE("rainbow k-connectivity") {
  const auto k4 = prop24_coloring({1, 3, 1});
  const auto r = is_rainbow_k_connected(k4.graph, k4.coloring, 2);
  REQUIRE(std::holds_alternative<RainbowCertificate>(r));
  CHECK(certificate_is_valid(k4.graph, k4.coloring, std::get<RainbowCertificate>(r)));

  const Graph k3 = complete_graph(3);
  for (unsigned mask = 0; mask < 8; ++mask) {
    const auto edges = k3.edges();
    std::vector<ColoredEdge> ce;
    for (std::size_t i = 0; i < 3; ++i) ce.push_back({edges[i], static_cast<Color>((mask >> i & 1) + 1)});
    CHECK(std::holds_alternative<FailureWitness>(is_rainbow_k_connected(k3, colored(k3, 2, ce), 2)));
  }
  const auto k3_rainbow = colored(k3, 3, {{{0, 1}, 1}, {{0, 2}, 2}, {{1, 2}, 3}});
  CHECK(std::holds_alternative<RainbowCertificate>(is_rainbow_k_connected(k3, k3_rainbow, 2)));

  const Graph k6 = complete_graph(6);
  CHECK(std::holds_alternative<RainbowCertificate>(is_rainbow_k_connected(k6, monochrome(k6), 1)));

  const Graph p3 = path_graph(3);
  const auto w = is_rainbow_k_connected(p3, monochrome(p3), 1);
  REQUIRE(std::holds_alternative<FailureWitness>(w));
  CHECK(std::get<FailureWitness>(w).x == 0);
  CHECK(std::get<FailureWitness>(w).y == 2);
}

TEST_CASE("worker count does not change the result") {
  const auto cg = j62_graph_and_coloring();
  const auto one = is_rainbow_k_connected(cg.graph, cg.coloring, 2);
  const auto four = is_rainbow_k_connected(cg.graph, cg.coloring, 2, {.workers = 4});
  REQUIRE(std::holds_alternative<RainbowCertificate>(one));
  REQUIRE(std::holds_alternative<RainbowCertificate>(four));
  CHECK(std::get<RainbowCertificate>(one).pairs.size() == std::get<RainbowCertificate>(four).pairs.size());
  const Graph g = noncommuting_graph(dihedral(9)).graph();
  const auto bad = random_two_coloring(g, 99);
  const auto a = is_rainbow_k_connected(g, bad, 3);
  const auto b = is_rainbow_k_connected(g, bad, 3, {.workers = 3});
  CHECK(a.index() == b.index());
  if (a.index() == 1) {
    CHECK(std::get<FailureWitness>(a).x == std::get<FailureWitness>(b).x);
    CHECK(std::get<FailureWitness>(a).y == std::get<FailureWitness>(b).y);
  }
}

TEST_CASE("counting matches backtracking") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(2 + rng() % 11, rng);
    const auto c = random_two_coloring(g, rng());
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      for (Vertex y = x + 1; y < g.vertex_count(); ++y)
        CHECK(max_disjoint_rainbow_paths(g, c, x, y, 2, DisjointMethod::kCounting) ==
              max_disjoint_rainbow_paths(g, c, x, y, 2, DisjointMethod::kBacktracking));
  }
}

TEST_CASE("certificate checker rejects tampering") {
  const auto cg = prop24_coloring({1, 4, 1});
  auto cert = std::get<RainbowCertificate>(is_rainbow_k_connected(cg.graph, cg.coloring, 2));
  CHECK(certificate_is_valid(cg.graph, cg.coloring, cert));

  SUBCASE("missing pair") {
    cert.pairs.pop_back();
    CHECK_FALSE(certificate_is_valid(cg.graph, cg.coloring, cert));
  }
  SUBCASE("too few paths") {
    cert.pairs[0].paths.pop_back();
    CHECK_FALSE(certificate_is_valid(cg.graph, cg.coloring, cert));
  }
  SUBCASE("shared interior") {
    auto& paths = cert.pairs[0].paths;
    const auto two = std::find_if(paths.begin(), paths.end(), [](const Path& p) { return p.size() == 3; });
    REQUIRE(two != paths.end());
    const Path p = *two;
    paths = {p, p};
    CHECK_FALSE(certificate_is_valid(cg.graph, cg.coloring, cert));
  }
  SUBCASE("repeated color") {
    // 0-1 and 1-2 both lie on the color-1 cycle.
    REQUIRE(cg.coloring.color(0, 1) == 1);
    REQUIRE(cg.coloring.color(1, 2) == 1);
    for (auto& pp : cert.pairs)
      if (pp.x == 0 && pp.y == 2) pp.paths = {{0, 2}, {0, 1, 2}};
    CHECK_FALSE(certificate_is_valid(cg.graph, cg.coloring, cert));
  }
}

TEST_CASE("search") {
  const Graph d18 = noncommuting_graph(dihedral(9)).graph();
  const auto found = search_two_coloring(d18, 2, 10'000, 1);
  REQUIRE(found.has_value());
  CHECK(std::holds_alternative<RainbowCertificate>(is_rainbow_k_connected(d18, *found, 2)));
  CHECK(search_two_coloring(d18, 2, 10'000, 1) == found);
  const auto parallel = search_two_coloring(d18, 2, 10'000, 1, {.workers = 4});
  CHECK(parallel == found);

  CHECK_FALSE(search_two_coloring(complete_graph(3), 2, 200, 1).has_value());
  CHECK(search_two_coloring(complete_graph(2), 1, 1, 0).has_value());
  try {
    search_two_coloring(path_graph(4), 2, 10, 1);
    FAIL("expected PreconditionKappa");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionKappa);
  }
}

TEST_CASE("rc lower bound and rc2 certificates") {
  const std::vector<std::size_t> k312{1, 1, 1, 2};
  CHECK(rc_lower_bound(complete_graph(5), 1) == 1);
  CHECK(rc_lower_bound(complete_graph(5), 2) == 2);
  CHECK(rc_lower_bound(complete_multipartite(k312), 1) == 2);

  const auto d6 = prop24_coloring({1, 3, 2});
  const auto gamma = noncommuting_graph(dihedral(3)).graph();
  CHECK(detect_complete_multipartite(d6.graph) == detect_complete_multipartite(gamma));
  const auto cert = certify_rc2(d6.graph, d6.coloring);
  CHECK(cert.lower_bound == 2);
  CHECK(cert.rc2 == 2);
  CHECK(cert.rc1 == std::size_t{2});

  const auto j62 = j62_graph_and_coloring();
  CHECK(certify_rc2(j62.graph, j62.coloring).rc2 == 2);

  const Graph k4 = complete_graph(4);
  try {
    certify_rc2(k4, monochrome(k4));
    FAIL("expected ColoringRejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kColoringRejected);
  }
}
