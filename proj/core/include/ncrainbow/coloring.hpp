#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncrainbow/graph.hpp"

namespace ncrainbow {

using Color = std::uint16_t;

struct ColoredEdge {
  Edge edge;
  Color color = 0;

  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

// Total assignment of colors 1..color_count to the edges of one graph.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  // Every edge of `g` must appear exactly once and no non-edge may appear.
  static EdgeColoring from_edges(const Graph& g, Color color_count,
                                 std::span<const ColoredEdge> edges);
  static EdgeColoring from_function(const Graph& g, Color color_count,
                                    const std::function<Color(Edge)>& color_of);

  std::size_t vertex_count() const noexcept { return n_; }
  Color color_count() const noexcept { return color_count_; }
  // 0 for non-edges.
  Color color(Vertex u, Vertex v) const { return colors_[u * n_ + v]; }
  std::vector<ColoredEdge> edges() const;
  std::size_t colors_used() const;
  // Same vertex count and colored edges exactly the edges of g.
  bool matches(const Graph& g) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t n_ = 0;
  Color color_count_ = 0;
  std::vector<Color> colors_;
};

// Parameters of K_{m[l], l n}: m parts of size l plus one part of size l*n.
struct PartitionSpec {
  std::size_t l = 1;
  std::size_t m = 1;
  std::size_t n = 1;
};

// Throws InvalidSpec unless l, m, n >= 1, m >= n + 1 and l*m*n != 2.
void validate(const PartitionSpec& spec);

// Reads sorted part sizes as K_{m[l],ln}: all parts but the largest share
// the size l and the largest is l*n. Returns nullopt if the sizes do not have
// that shape or the resulting spec is invalid.
std::optional<PartitionSpec> partition_spec_for(std::span<const std::size_t> sorted_parts);

// Vertex a_{j,i} of K_{m[l],ln} with 1-based j and part i (i = m+1 is the
// big part).
struct PartVertex {
  std::size_t j = 0;
  std::size_t i = 0;
};

// Graph index of a_{j,i}: small parts first, each of size l, then the big part.
Vertex part_vertex_index(const PartitionSpec& spec, PartVertex a);

// The first-color edge families of the construction, as listed for the
// case the spec falls in (n = 1 with m = 2, m = 3 or m >= 4; or n >= 2).
std::vector<std::pair<PartVertex, PartVertex>> prop24_color_one_pairs(
    const PartitionSpec& spec);

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

// K_{m[l],ln} with labels "a_{j,i}"; color 1 on the listed families, color 2
// elsewhere. Throws InvalidSpec, or Internal if a listed pair is not an edge.
ColoredGraph prop24_coloring(const PartitionSpec& spec);

// J(6,2) o complement(K_2) with vertices a_i a_j (fiber 0) and b_i b_j
// (fiber 1). Color 1: a-a and b-b edges whose shared index exceeds both
// others, and a-b edges whose shared index is below both others.
ColoredGraph j62_graph_and_coloring();

// SplitMix64: state += 0x9E3779B97F4A7C15, then the standard finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

// Edges in sorted order each draw one SplitMix64 output; the top bit picks
// color 2, otherwise color 1.
EdgeColoring random_two_coloring(const Graph& g, std::uint64_t seed);

// Carries a coloring of `source` onto `target` along an isomorphism
// source -> target (mapping[v] = image of v).
EdgeColoring transport_coloring(const Graph& source, const EdgeColoring& coloring,
                                const Graph& target, std::span<const Vertex> mapping);

}  // namespace ncrainbow
