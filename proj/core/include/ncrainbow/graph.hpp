#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncrainbow {

using Vertex = std::uint32_t;

// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with distinct vertex labels. Adjacency rows are
// bitsets of 64-bit words. Immutable; build through GraphBuilder.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex u) const;
  std::vector<Vertex> neighbors(Vertex u) const;
  std::size_t common_neighbor_count(Vertex u, Vertex v) const;
  std::vector<Vertex> common_neighbors(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;  // sorted
  bool is_complete() const { return 2 * edge_count_ == n_ * (n_ == 0 ? 0 : n_ - 1); }

  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  const std::string& label(Vertex u) const { return labels_[u]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_ && a.labels_ == b.labels_;
  }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count);
  explicit GraphBuilder(std::vector<std::string> labels);

  std::size_t vertex_count() const noexcept { return graph_.n_; }
  // Rejects self-loops and out-of-range endpoints; duplicate edges are
  // ignored unless `strict`.
  GraphBuilder& add_edge(Vertex u, Vertex v, bool strict = false);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

  // Checks that labels are distinct.
  Graph build() &&;

 private:
  Graph graph_;
};

Graph complete_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// Parts occupy consecutive vertex ranges in the given order; labels are
// "p:i" (0-based part and index within part).
Graph complete_multipartite(std::span<const std::size_t> part_sizes);

// Vertex (b, f) sits at b * |fiber| + f; labels "(base,fiber)".
Graph lexicographic_product(const Graph& base, const Graph& fiber);

Graph complement(const Graph& g);

// k-subsets of {1..n} in colexicographic order, labels like "{1,3}".
Graph johnson(std::size_t n, std::size_t k);

// If the complement of g is a disjoint union of cliques, the clique sizes in
// ascending order.
std::optional<std::vector<std::size_t>> detect_complete_multipartite(const Graph& g);

// Same, but returns the parts themselves (vertex lists in ascending order,
// parts ordered by their least vertex).
std::optional<std::vector<std::vector<Vertex>>> multipartite_parts(const Graph& g);

bool is_connected(const Graph& g);
// Largest shortest-path distance; nullopt for disconnected graphs.
std::optional<std::size_t> diameter(const Graph& g);

// Graph with vertices renamed: vertex v of `g` becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace ncrainbow
