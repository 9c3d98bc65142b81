#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ncrainbow/connectivity.hpp"
#include "ncrainbow/error.hpp"
#include "ncrainbow/graph.hpp"
#include "ncrainbow/isomorphism.hpp"
#include "ncrainbow/ncgraph.hpp"
#include "ncrainbow/group_catalog.hpp"
#include "oracles.hpp"

using namespace ncrainbow;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("builder") {
  GraphBuilder b(3);
  b.add_edge(0, 1).add_edge(1, 0);
  CHECK_THROWS_AS(b.add_edge(0, 0), Error);
  CHECK_THROWS_AS(b.add_edge(0, 3), Error);
  CHECK_THROWS_AS(b.add_edge(0, 1, true), Error);
  const Graph g = std::move(b).build();
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK_THROWS_AS(GraphBuilder(std::vector<std::string>{"a", "a"}).build(), Error);
}

TEST_CASE("complete multipartite") {
  const std::vector<std::size_t> k3{1, 1, 1}, k312{1, 1, 1, 2}, oct{2, 2, 2};
  CHECK(complete_multipartite(k3).edge_count() == 3);
  CHECK(complete_multipartite(k312).vertex_count() == 5);
  CHECK(complete_multipartite(k312).edge_count() == 9);
  const Graph o = complete_multipartite(oct);
  CHECK(o.vertex_count() == 6);
  CHECK(o.edge_count() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(o.degree(v) == 4);
  CHECK(o.label(3) == "1:1");
}

TEST_CASE("lexicographic product") {
  const Graph k22 = lexicographic_product(complete_graph(2), edgeless_graph(2));
  CHECK(k22.vertex_count() == 4);
  CHECK(k22.edge_count() == 4);
  CHECK_FALSE(k22.adjacent(0, 1));
  CHECK(k22.adjacent(1, 2));
  CHECK(k22.label(3) == "(1,1)");

  const Graph two_edges = lexicographic_product(edgeless_graph(2), complete_graph(2));
  CHECK(two_edges.edge_count() == 2);
  CHECK(two_edges.adjacent(0, 1));
  CHECK(two_edges.adjacent(2, 3));

  const Graph c5 = cycle_graph(5);
  CHECK(are_isomorphic(lexicographic_product(c5, complete_graph(1)), c5).isomorphic());
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(lexicographic_product(c5, edgeless_graph(n)).edge_count() == n * n * c5.edge_count());
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(5)).edge_count() == 0);
  const Graph c7 = cycle_graph(7);
  CHECK(complement(complement(c7)) == c7);
  const std::vector<std::size_t> oct{2, 2, 2};
  const Graph m = complement(complete_multipartite(oct));
  CHECK(m.edge_count() == 3);
  for (Vertex v = 0; v < 6; ++v) CHECK(m.degree(v) == 1);
}

TEST_CASE("johnson") {
  const Graph j = johnson(6, 2);
  CHECK(j.vertex_count() == 15);
  CHECK(j.edge_count() == 60);
  for (Vertex v = 0; v < 15; ++v) CHECK(j.degree(v) == 8);
  CHECK(j.label(0) == "{1,2}");
  CHECK(j.label(1) == "{1,3}");
  CHECK(j.label(2) == "{2,3}");
  CHECK(johnson(5, 1).is_complete());
  CHECK(johnson(3, 2).is_complete());
  CHECK(johnson(3, 2).vertex_count() == 3);
}

TEST_CASE("detect complete multipartite") {
  const std::vector<std::size_t> oct{2, 2, 2};
  CHECK(detect_complete_multipartite(complete_multipartite(oct)) == oct);
  CHECK_FALSE(detect_complete_multipartite(cycle_graph(5)).has_value());
  CHECK(detect_complete_multipartite(complete_graph(1)) == std::vector<std::size_t>{1});

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::size_t> parts;
    std::size_t total = 0;
    while (total < 40) {
      const std::size_t s = 1 + rng() % 8;
      if (total + s > 40) break;
      parts.push_back(s);
      total += s;
      if (rng() % 4 == 0) break;
    }
    const Graph g = permute(complete_multipartite(parts), shuffled(total, rng));
    std::sort(parts.begin(), parts.end());
    CHECK(detect_complete_multipartite(g) == parts);
  }
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(11);
  const std::vector<std::size_t> oct{2, 2, 2};
  CHECK_FALSE(are_isomorphic(complete_multipartite(oct), cycle_graph(6)).isomorphic());

  SUBCASE("shuffled copies") {
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + rng() % 20;
      const Graph g = random_graph(n, 0.4, rng);
      const Graph h = permute(g, shuffled(n, rng));
      const auto r = are_isomorphic(g, h);
      REQUIRE(r.isomorphic());
      CHECK(is_isomorphism(g, h, *r.mapping));
    }
  }

  SUBCASE("agrees with brute force on small graphs") {
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + rng() % 7;
      const Graph g = random_graph(n, 0.5, rng);
      const Graph h = random_graph(n, 0.5, rng);
      const auto r = are_isomorphic(g, h);
      CHECK(r.isomorphic() == oracle::isomorphic(g, h));
      if (r.mapping) CHECK(is_isomorphism(g, h, *r.mapping));
    }
  }

  SUBCASE("regular graphs") {
    // C6 vs two triangles: both 2-regular on six vertices.
    CHECK_FALSE(are_isomorphic(cycle_graph(6),
                               lexicographic_product(edgeless_graph(2), complete_graph(3)))
                    .isomorphic());
    const Graph j = johnson(6, 2);
    CHECK(are_isomorphic(j, permute(j, shuffled(15, rng))).isomorphic());
  }

  SUBCASE("order-32 graphs") {
    const Graph target = lexicographic_product(johnson(6, 2), edgeless_graph(2));
    for (const auto& g : extraspecial32_groups()) {
      const auto r = are_isomorphic(noncommuting_graph(g.group).graph(), target);
      REQUIRE(r.isomorphic());
      CHECK(is_isomorphism(noncommuting_graph(g.group).graph(), target, *r.mapping));
    }
  }

  SUBCASE("budget") {
    const Graph j = johnson(6, 2);
    try {
      are_isomorphic(j, permute(j, shuffled(15, rng)), {.node_budget = 1});
      FAIL("expected SearchBudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kSearchBudgetExceeded);
    }
  }
}

TEST_CASE("vertex connectivity") {
  const std::vector<std::size_t> k312{1, 1, 1, 2};
  CHECK(vertex_connectivity(complete_graph(5)) == 4);
  CHECK(vertex_connectivity(complete_multipartite(k312)) == 3);
  CHECK(vertex_connectivity(path_graph(3)) == 1);
  CHECK(vertex_connectivity(edgeless_graph(3)) == 0);
  CHECK(vertex_connectivity(cycle_graph(8)) == 2);
  CHECK(vertex_connectivity_at_least(cycle_graph(8), 2));
  CHECK_FALSE(vertex_connectivity_at_least(cycle_graph(8), 3));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    std::vector<std::size_t> parts;
    std::size_t total = 0;
    while (total < 2 || rng() % 3) {
      const std::size_t s = 1 + rng() % 5;
      if (total + s > 30) break;
      parts.push_back(s);
      total += s;
    }
    if (parts.size() < 2) continue;
    const Graph g = complete_multipartite(parts);
    const std::size_t expected = total - *std::max_element(parts.begin(), parts.end());
    CHECK(vertex_connectivity(g) == expected);
    if (total <= 12) CHECK(oracle::vertex_connectivity(g) == expected);
  }
  for (int t = 0; t < 100; ++t) {
    const Graph g = random_graph(2 + rng() % 9, 0.5, rng);
    CHECK(vertex_connectivity(g) == oracle::vertex_connectivity(g));
  }
}

TEST_CASE("connectivity and diameter") {
  CHECK(diameter(path_graph(4)) == 3u);
  CHECK_FALSE(diameter(edgeless_graph(2)).has_value());
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(edgeless_graph(2)));
}
