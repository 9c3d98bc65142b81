#include <doctest.h>

#include "ncrainbow/error.hpp"
#include "ncrainbow/group_catalog.hpp"
#include "ncrainbow/ncgraph.hpp"
#include "reproduce.hpp"

using namespace ncrainbow;

namespace {

std::vector<NamedGroup> suite() {
  return reproduce::lemma21_suite(NCRAINBOW_FIXTURES_DIR);
}

}  // namespace

TEST_CASE("small non-commuting graphs") {
  const auto d6 = noncommuting_graph(dihedral(3));
  CHECK(d6.vertex_count() == 5);
  CHECK(d6.graph().edge_count() == 9);
  CHECK(detect_complete_multipartite(d6.graph()) == std::vector<std::size_t>{1, 1, 1, 2});
  CHECK(d6.graph().label(0) == d6.group().name(1));

  const std::vector<std::size_t> oct{2, 2, 2};
  CHECK(detect_complete_multipartite(noncommuting_graph(dihedral(4)).graph()) == oct);
  CHECK(detect_complete_multipartite(noncommuting_graph(dicyclic(2)).graph()) == oct);

  CHECK_THROWS_AS(noncommuting_graph(cyclic(6)), Error);
}

TEST_CASE("vertex map") {
  const auto d8 = noncommuting_graph(dihedral(4));
  CHECK_FALSE(d8.vertex_of(0).has_value());
  CHECK_FALSE(d8.vertex_of(2).has_value());
  CHECK(d8.vertex_of(1) == Vertex{0});
  CHECK(d8.vertex_of(3) == Vertex{1});
  for (Vertex v = 0; v < d8.vertex_count(); ++v) CHECK(d8.vertex_of(d8.element(v)) == v);
}

TEST_CASE("tau") {
  const auto d6 = noncommuting_graph(dihedral(3));
  const Vertex r = *d6.vertex_of(1), r2 = *d6.vertex_of(2), s = *d6.vertex_of(3);
  CHECK(tau(d6, r, s, TauCheck::kCrossCheck) == 2);
  CHECK(tau(d6, r, r2, TauCheck::kCrossCheck) == 3);
  CHECK(tau_from_centralizers(dihedral(3), 1, 3) == 2);

  const auto d8 = noncommuting_graph(dihedral(4));
  const Vertex x = *d8.vertex_of(1), y = *d8.vertex_of(4);
  REQUIRE(d8.graph().adjacent(x, y));
  CHECK(tau(d8, x, y, TauCheck::kCrossCheck) == 2);
}

TEST_CASE("common-neighbour bound over the suite") {
  CHECK(lemma21_check(dihedral(3)).min_tau == 2);
  CHECK(6 * lemma21_check(dicyclic(2)).min_tau >= 8);
  CHECK_THROWS_AS(lemma21_check(cyclic(4)), Error);
  for (const auto& g : suite()) {
    CAPTURE(g.id);
    const auto r = lemma21_check(g.group);
    CHECK(r.identity_holds);
    CHECK(6 * r.min_tau >= g.group.order());
    CHECK(r.slack >= 0);
  }
}

TEST_CASE("graph shape over the suite") {
  for (const auto& g : suite()) {
    CAPTURE(g.id);
    const auto ncg = noncommuting_graph(g.group);
    CHECK(ncg.vertex_count() == g.group.order() - center(g.group).size());
    for (Vertex v = 0; v < ncg.vertex_count(); ++v) CHECK(ncg.graph().degree(v) > 0);
    const auto d = diameter(ncg.graph());
    REQUIRE(d.has_value());
    CHECK(*d <= 2);
  }
}

TEST_CASE("edge count identity") {
  const auto d8 = edge_count_bound_check(dihedral(4));
  CHECK(d8.edge_count == 12);
  CHECK(d8.bound_times_four == 48);
  CHECK(d8.equality);
  const auto d6 = edge_count_bound_check(dihedral(3));
  CHECK(d6.edge_count == 9);
  CHECK(d6.bound_times_four == 30);
  CHECK_FALSE(d6.equality);
  CHECK(edge_count_bound_check(dicyclic(2)).equality);
  for (const auto& g : suite()) {
    const auto r = edge_count_bound_check(g.group);
    CHECK(r.centralizer_sum == 2 * r.edge_count);
    CHECK(r.four_times_edges >= r.bound_times_four);
  }
}

TEST_CASE("product with an abelian factor") {
  const auto r = lemma22_check(dihedral(3), 3);
  CHECK(r.natural_map_is_isomorphism);
  CHECK(r.vertex_count == 15);
  CHECK(lemma22_check(dicyclic(2), 3).natural_map_is_isomorphism);
  const auto one = lemma22_check(dihedral(4), 1);
  CHECK(one.natural_map_is_isomorphism);
  CHECK(one.edge_count == noncommuting_graph(dihedral(4)).graph().edge_count());
}
