#include "ncrainbow/ncgraph.hpp"

#include <string>

#include "ncrainbow/error.hpp"

namespace ncrainbow {

NonCommutingGraph::NonCommutingGraph(Group group)
    : group_(std::move(group)), center_(ncrainbow::center(group_)),
      element_to_vertex_(group_.order()) {
  if (center_.size() == group_.order())
    throw Error(ErrorCode::kAbelianGroup,
                "abelian group has an empty non-commuting graph");
  std::vector<std::string> labels;
  for (Element e = 0; e < group_.order(); ++e) {
    if (center_.contains(e)) continue;
    element_to_vertex_[e] = static_cast<Vertex>(vertex_to_element_.size());
    vertex_to_element_.push_back(e);
    labels.push_back(group_.name(e));
  }
  GraphBuilder b(std::move(labels));
  const auto n = static_cast<Vertex>(vertex_to_element_.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!group_.commute(vertex_to_element_[u], vertex_to_element_[v])) b.add_edge(u, v);
  graph_ = std::move(b).build();
}

std::optional<Vertex> NonCommutingGraph::vertex_of(Element e) const {
  if (e >= element_to_vertex_.size()) return std::nullopt;
  return element_to_vertex_[e];
}

NonCommutingGraph noncommuting_graph(const Group& g) { return NonCommutingGraph(g); }

std::size_t tau_from_centralizers(const Group& g, Element x, Element y) {
  std::size_t in_union = 0;
  for (Element z = 0; z < g.order(); ++z)
    if (g.commute(x, z) || g.commute(y, z)) ++in_union;
  return g.order() - in_union;
}

std::size_t tau(const NonCommutingGraph& ncg, Vertex x, Vertex y, TauCheck check) {
  if (x == y) throw Error(ErrorCode::kInvalidArgument, "tau needs distinct vertices");
  const std::size_t graph_side = ncg.graph().common_neighbor_count(x, y);
  if (check == TauCheck::kCrossCheck) {
    const std::size_t group_side =
        tau_from_centralizers(ncg.group(), ncg.element(x), ncg.element(y));
    if (group_side != graph_side)
      throw Error(ErrorCode::kInternal,
                  "tau mismatch at (" + ncg.graph().label(x) + ", " + ncg.graph().label(y) +
                      "): graph " + std::to_string(graph_side) + " vs centralizers " +
                      std::to_string(group_side));
  }
  return graph_side;
}

CommonNeighborReport lemma21_check(const Group& g) {
  const NonCommutingGraph ncg(g);
  CommonNeighborReport report;
  report.order = g.order();
  bool first = true;
  const auto n = static_cast<Vertex>(ncg.vertex_count());
  const auto order = static_cast<long long>(g.order());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const std::size_t t = tau(ncg, x, y, TauCheck::kCrossCheck);
      const long long slack = 6 * static_cast<long long>(t) - order;
      if (slack < 0)
        throw Error(ErrorCode::kBoundViolated,
                    "6 * tau(" + ncg.graph().label(x) + ", " + ncg.graph().label(y) +
                        ") = " + std::to_string(6 * t) + " < |G| = " + std::to_string(order));
      ++report.pairs_checked;
      if (first || t < report.min_tau) {
        report.min_tau = t;
        report.witness_x = x;
        report.witness_y = y;
        report.slack = slack;
        first = false;
      }
    }
  return report;
}

EdgeCountReport edge_count_bound_check(const Group& g) {
  const NonCommutingGraph ncg(g);
  EdgeCountReport report;
  report.edge_count = ncg.graph().edge_count();
  for (Vertex v = 0; v < ncg.vertex_count(); ++v)
    report.centralizer_sum += g.order() - centralizer(g, ncg.element(v)).size();
  if (report.centralizer_sum != 2 * report.edge_count)
    throw Error(ErrorCode::kBoundViolated,
                "2|E| = " + std::to_string(2 * report.edge_count) +
                    " but centralizer sum = " + std::to_string(report.centralizer_sum));
  using boost::multiprecision::cpp_int;
  report.four_times_edges = cpp_int(4) * report.edge_count;
  report.bound_times_four = cpp_int(g.order()) * (g.order() - ncg.center().size());
  if (report.four_times_edges < report.bound_times_four)
    throw Error(ErrorCode::kBoundViolated, "edge count below quarter-product bound");
  report.equality = report.four_times_edges == report.bound_times_four;
  return report;
}

ProductGraphReport lemma22_check(const Group& g, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "lemma22_check needs n >= 1");
  const NonCommutingGraph base(g);
  const NonCommutingGraph product(direct_product(g, cyclic(n)));
  const Graph blown_up = lexicographic_product(base.graph(), edgeless_graph(n));

  ProductGraphReport report;
  report.vertex_count = product.vertex_count();
  report.edge_count = product.graph().edge_count();
  if (blown_up.vertex_count() != product.vertex_count() ||
      blown_up.edge_count() != product.graph().edge_count())
    return report;

  // Product element (g, a) sits at index g*n + a.
  std::vector<Vertex> natural(product.vertex_count());
  for (Vertex v = 0; v < product.vertex_count(); ++v) {
    const Element e = product.element(v);
    const auto base_vertex = base.vertex_of(static_cast<Element>(e / n));
    if (!base_vertex) return report;
    natural[v] = static_cast<Vertex>(*base_vertex * n + e % n);
  }
  const Graph& p = product.graph();
  for (Vertex u = 0; u < p.vertex_count(); ++u)
    for (Vertex v = u + 1; v < p.vertex_count(); ++v)
      if (p.adjacent(u, v) != blown_up.adjacent(natural[u], natural[v])) return report;
  std::vector<bool> hit(natural.size(), false);
  for (Vertex w : natural) {
    if (hit[w]) return report;
    hit[w] = true;
  }
  report.natural_map_is_isomorphism = true;
  return report;
}

}  // namespace ncrainbow
