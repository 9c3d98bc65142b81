#pragma once

// Brute-force reference computations. Each one works from definitions and
// shares no code path with the library routine it is compared against.

#include <cstddef>
#include <optional>
#include <vector>

#include "ncrainbow/bounds.hpp"
#include "ncrainbow/coloring.hpp"
#include "ncrainbow/graph.hpp"
#include "ncrainbow/group.hpp"
#include "ncrainbow/rainbow.hpp"

namespace ncrainbow::oracle {

// Pair-by-pair union bound: tau counted as elements commuting with neither
// x nor y, straight from the group table.
Rational pair_summation_failure_bound(const Group& g, std::size_t k);

// Smallest vertex set whose removal disconnects g (n - 1 for complete g),
// by enumerating subsets in order of size. Meant for n <= 12.
std::size_t vertex_connectivity(const Graph& g);

// Tries every permutation. Meant for n <= 8.
bool isomorphic(const Graph& g1, const Graph& g2);

// Every simple x-y path (no color pruning), then filtered for distinct colors.
std::vector<Path> rainbow_paths(const Graph& g, const EdgeColoring& col, Vertex x, Vertex y,
                                std::size_t max_len);

// Group isomorphism by choosing images for a generating set and closing
// under products; returns the element bijection.
std::optional<std::vector<Element>> group_isomorphism(const Group& a, const Group& b);

// Elements z with zx = xz for all x, by direct scan.
std::size_t center_size(const Group& g);

}  // namespace ncrainbow::oracle
