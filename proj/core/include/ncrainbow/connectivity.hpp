#pragma once

#include <cstddef>

#include "ncrainbow/graph.hpp"

namespace ncrainbow {

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
// s != t (unit vertex capacities, augmenting paths). Stops early once
// `cap` paths are found.
std::size_t vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t,
                                  std::size_t cap = static_cast<std::size_t>(-1));

// kappa(g): the fewest vertex deletions that disconnect g, with
// kappa(K_n) = n - 1. Uses Menger's theorem over non-adjacent pairs whose
// first vertex ranges over a prefix of length kappa + 1 (Even's bound).
std::size_t vertex_connectivity(const Graph& g);

// kappa(g) >= k, decided with flows capped at k.
bool vertex_connectivity_at_least(const Graph& g, std::size_t k);

}  // namespace ncrainbow
