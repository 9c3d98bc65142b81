#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncrainbow/graph.hpp"
#include "ncrainbow/group.hpp"

namespace ncrainbow {

// Non-commuting graph of a group: vertices are the non-central elements in
// index order, labelled by element name; x ~ y iff xy != yx.
class NonCommutingGraph {
 public:
  // Throws AbelianGroup.
  explicit NonCommutingGraph(Group group);

  const Graph& graph() const noexcept { return graph_; }
  const Group& group() const noexcept { return group_; }
  const ElementSet& center() const noexcept { return center_; }

  Element element(Vertex v) const { return vertex_to_element_[v]; }
  std::optional<Vertex> vertex_of(Element e) const;
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

 private:
  Group group_;
  ElementSet center_;
  std::vector<Element> vertex_to_element_;
  std::vector<std::optional<Vertex>> element_to_vertex_;
  Graph graph_;
};

NonCommutingGraph noncommuting_graph(const Group& g);

enum class TauCheck { kFast, kCrossCheck };

// Common neighbours of two distinct vertices. With kCrossCheck the value is
// also derived group-side as |G| - |C(x) u C(y)| and a mismatch throws
// Internal.
std::size_t tau(const NonCommutingGraph& ncg, Vertex x, Vertex y,
                TauCheck check = TauCheck::kFast);

// |G| - |C_G(x) u C_G(y)| from the centralizers alone.
std::size_t tau_from_centralizers(const Group& g, Element x, Element y);

struct CommonNeighborReport {
  std::size_t order = 0;
  std::size_t pairs_checked = 0;
  std::size_t min_tau = 0;
  Vertex witness_x = 0;
  Vertex witness_y = 0;
  // Every pair satisfied graph-side tau == centralizer-side tau.
  bool identity_holds = true;
  // min over pairs of 6 * tau - |G|, never negative on return.
  long long slack = 0;
};

// Checks 6 * tau(x, y) >= |G| and the centralizer identity for all vertex
// pairs. Throws AbelianGroup, or BoundViolated naming the first bad pair.
CommonNeighborReport lemma21_check(const Group& g);

struct EdgeCountReport {
  std::size_t edge_count = 0;
  // sum over vertices of |G| - |C(x)|; equals 2 * edge_count.
  std::size_t centralizer_sum = 0;
  // 4 * |E| and |G| (|G| - |Z(G)|), so that the bound reads lhs >= rhs.
  boost::multiprecision::cpp_int four_times_edges;
  boost::multiprecision::cpp_int bound_times_four;
  bool equality = false;
};

// Edge count against the centralizer sum and the quarter-product lower
// bound. Throws BoundViolated if either relation fails.
EdgeCountReport edge_count_bound_check(const Group& g);

struct ProductGraphReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool natural_map_is_isomorphism = false;
};

// Builds the non-commuting graph of G x Z_n and Gamma_G o complement(K_n)
// and checks that (g, a) -> (vertex of g, a) is an isomorphism.
ProductGraphReport lemma22_check(const Group& g, std::size_t n);

}  // namespace ncrainbow
