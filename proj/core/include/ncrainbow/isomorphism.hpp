#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ncrainbow/graph.hpp"

namespace ncrainbow {

struct IsomorphismOptions {
  // Search-tree nodes to visit before giving up with SearchBudgetExceeded.
  std::uint64_t node_budget = 1'000'000;
};

struct IsomorphismResult {
  // mapping[v] = image in the second graph; empty when not isomorphic.
  std::optional<std::vector<Vertex>> mapping;
  std::uint64_t nodes_visited = 0;

  bool isomorphic() const noexcept { return mapping.has_value(); }
};

// Individualization-refinement search. The two graphs are colour-refined
// jointly (1-dimensional Weisfeiler-Leman, seeded by degree); each branch
// individualizes one vertex of the first graph's smallest non-trivial cell
// against every candidate of the matching cell. A returned mapping is always
// re-checked edge by edge. Throws SearchBudgetExceeded when the node budget
// runs out, so "unknown" is never reported as "not isomorphic".
IsomorphismResult are_isomorphic(const Graph& g1, const Graph& g2,
                                 const IsomorphismOptions& options = {});

// True iff `mapping` is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping);

}  // namespace ncrainbow
