#include "ncrainbow/coloring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "ncrainbow/error.hpp"

namespace ncrainbow {

EdgeColoring EdgeColoring::from_edges(const Graph& g, Color color_count,
                                      std::span<const ColoredEdge> edges) {
  if (color_count == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one color");
  EdgeColoring c;
  c.n_ = g.vertex_count();
  c.color_count_ = color_count;
  c.colors_.assign(c.n_ * c.n_, 0);
  for (const ColoredEdge& ce : edges) {
    const auto [u, v] = ce.edge;
    const std::string where = std::to_string(u) + "-" + std::to_string(v);
    if (u >= c.n_ || v >= c.n_ || u == v || !g.adjacent(u, v))
      throw Error(ErrorCode::kInvalidArgument, "colored pair " + where + " is not an edge");
    if (ce.color == 0 || ce.color > color_count)
      throw Error(ErrorCode::kInvalidArgument,
                  "color " + std::to_string(ce.color) + " on " + where + " out of range");
    if (c.colors_[u * c.n_ + v] != 0)
      throw Error(ErrorCode::kInvalidArgument, "edge " + where + " colored twice");
    c.colors_[u * c.n_ + v] = c.colors_[v * c.n_ + u] = ce.color;
  }
  for (const Edge& e : g.edges())
    if (c.colors_[e.u * c.n_ + e.v] == 0)
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " uncolored");
  return c;
}

EdgeColoring EdgeColoring::from_function(const Graph& g, Color color_count,
                                         const std::function<Color(Edge)>& color_of) {
  std::vector<ColoredEdge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e, color_of(e)});
  return from_edges(g, color_count, edges);
}

std::vector<ColoredEdge> EdgeColoring::edges() const {
  std::vector<ColoredEdge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (Color c = color(u, v)) out.push_back({Edge(u, v), c});
  return out;
}

std::size_t EdgeColoring::colors_used() const {
  std::set<Color> used;
  for (const auto& ce : edges()) used.insert(ce.color);
  return used.size();
}

bool EdgeColoring::matches(const Graph& g) const {
  if (g.vertex_count() != n_) return false;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if ((color(u, v) != 0) != g.adjacent(u, v)) return false;
  return true;
}

void validate(const PartitionSpec& spec) {
  const auto [l, m, n] = spec;
  if (l == 0 || m == 0 || n == 0)
    throw Error(ErrorCode::kInvalidSpec, "l, m and n must be positive");
  if (m < n + 1)
    throw Error(ErrorCode::kInvalidSpec,
                "m >= n + 1 violated (m = " + std::to_string(m) + ", n = " +
                    std::to_string(n) + ")");
  if (l * m * n == 2) throw Error(ErrorCode::kInvalidSpec, "lmn = 2 is excluded");
}

std::optional<PartitionSpec> partition_spec_for(std::span<const std::size_t> sorted_parts) {
  if (sorted_parts.size() < 2 || !std::is_sorted(sorted_parts.begin(), sorted_parts.end()))
    return std::nullopt;
  const std::size_t l = sorted_parts.front();
  const std::size_t big = sorted_parts.back();
  if (l == 0 || big % l != 0) return std::nullopt;
  for (std::size_t i = 0; i + 1 < sorted_parts.size(); ++i)
    if (sorted_parts[i] != l) return std::nullopt;
  const PartitionSpec spec{l, sorted_parts.size() - 1, big / l};
  try {
    validate(spec);
  } catch (const Error&) {
    return std::nullopt;
  }
  return spec;
}

Vertex part_vertex_index(const PartitionSpec& spec, PartVertex a) {
  const std::size_t part_size = a.i == spec.m + 1 ? spec.l * spec.n : spec.l;
  if (a.i < 1 || a.i > spec.m + 1 || a.j < 1 || a.j > part_size)
    throw Error(ErrorCode::kInternal,
                "a_{" + std::to_string(a.j) + "," + std::to_string(a.i) + "} does not exist");
  return static_cast<Vertex>((a.i - 1) * spec.l + (a.j - 1));
}

std::vector<std::pair<PartVertex, PartVertex>> prop24_color_one_pairs(
    const PartitionSpec& spec) {
  validate(spec);
  const auto [l, m, n] = spec;
  std::vector<std::pair<PartVertex, PartVertex>> out;
  auto add = [&out](std::size_t j1, std::size_t i1, std::size_t j2, std::size_t i2) {
    out.push_back({PartVertex{j1, i1}, PartVertex{j2, i2}});
  };

  if (n == 1 && m == 2) {
    const std::size_t r = l / 2;
    for (std::size_t j = 1; j <= r; ++j) {
      add(2 * j - 1, 1, 2 * j - 1, 2);
      add(2 * j - 1, 1, 2 * j, 2);
      add(2 * j - 1, 1, 2 * j - 1, 3);
      add(2 * j, 1, 2 * j - 1, 2);
      add(2 * j, 1, 2 * j, 2);
      add(2 * j, 1, 2 * j, 3);
      add(2 * j - 1, 2, 2 * j - 1, 3);
      add(2 * j - 1, 2, 2 * j, 3);
    }
    if (l % 2 == 1) {
      add(l, 2, l, 3);
      for (std::size_t j = 1; j <= r; ++j) {
        add(l, 1, 2 * j - 1, 2);
        add(l, 1, 2 * j, 3);
        add(l, 2, 2 * j - 1, 1);
        add(l, 2, 2 * j, 1);
        add(l, 2, 2 * j - 1, 3);
        add(l, 2, 2 * j, 3);
        add(l, 3, 2 * j, 2);
      }
    }
  } else if (n == 1 && m == 3) {
    for (std::size_t j = 1; j <= l; ++j) {
      add(j, 1, j, 2);
      add(j, 2, j, 4);
      add(j, 3, j, 4);
    }
  } else if (n == 1) {
    for (std::size_t j = 1; j <= l; ++j) {
      for (std::size_t i = 1; i <= m; ++i) add(j, i, j, i + 1);
      add(j, m + 1, j, 1);
    }
  } else {
    for (std::size_t j = 1; j <= l; ++j) {
      for (std::size_t i = 1; i <= m - 1; ++i) add(j, i, j, i + 1);
      add(j, 1, j, m);
      for (std::size_t i = 1; i <= n; ++i) add(j, i, (j - 1) * n + i, m + 1);
    }
  }
  return out;
}

ColoredGraph prop24_coloring(const PartitionSpec& spec) {
  validate(spec);
  std::vector<std::size_t> parts(spec.m, spec.l);
  parts.push_back(spec.l * spec.n);
  const Graph plain = complete_multipartite(parts);

  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= spec.m + 1; ++i)
    for (std::size_t j = 1; j <= parts[i - 1]; ++j)
      labels.push_back("a_{" + std::to_string(j) + "," + std::to_string(i) + "}");
  GraphBuilder b(std::move(labels));
  for (const Edge& e : plain.edges()) b.add_edge(e.u, e.v);
  Graph graph = std::move(b).build();

  std::set<Edge> color_one;
  for (const auto& [a, c] : prop24_color_one_pairs(spec)) {
    const Edge e(part_vertex_index(spec, a), part_vertex_index(spec, c));
    if (!graph.adjacent(e.u, e.v))
      throw Error(ErrorCode::kInternal,
                  "listed pair " + graph.label(e.u) + " " + graph.label(e.v) +
                      " lies inside one part");
    color_one.insert(e);
  }
  EdgeColoring coloring = EdgeColoring::from_function(
      graph, 2, [&](Edge e) -> Color { return color_one.contains(e) ? 1 : 2; });
  return {std::move(graph), std::move(coloring)};
}

ColoredGraph j62_graph_and_coloring() {
  const Graph base = johnson(6, 2);
  const Graph product = lexicographic_product(base, edgeless_graph(2));

  // johnson() lists 2-subsets of {1..6} in colex order.
  std::vector<std::array<std::size_t, 2>> subsets;
  for (std::size_t hi = 2; hi <= 6; ++hi)
    for (std::size_t lo = 1; lo < hi; ++lo) subsets.push_back({lo, hi});

  std::vector<std::string> labels;
  for (const auto& s : subsets)
    for (const char letter : {'a', 'b'})
      labels.push_back(std::string(1, letter) + std::to_string(s[0]) + letter +
                       std::to_string(s[1]));
  GraphBuilder b(std::move(labels));
  for (const Edge& e : product.edges()) b.add_edge(e.u, e.v);
  Graph graph = std::move(b).build();

  auto rule = [&subsets](Edge e) -> Color {
    const auto& s = subsets[e.u / 2];
    const auto& t = subsets[e.v / 2];
    const bool same_letter = e.u % 2 == e.v % 2;
    std::size_t shared = 0, j = 0, k = 0;
    for (std::size_t x : s)
      for (std::size_t y : t)
        if (x == y) shared = x;
    j = s[0] == shared ? s[1] : s[0];
    k = t[0] == shared ? t[1] : t[0];
    if (same_letter) return shared > std::max(j, k) ? 1 : 2;
    return shared < std::min(j, k) ? 1 : 2;
  };
  EdgeColoring coloring = EdgeColoring::from_function(graph, 2, rule);
  return {std::move(graph), std::move(coloring)};
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

EdgeColoring random_two_coloring(const Graph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return EdgeColoring::from_function(
      g, 2, [&rng](Edge) -> Color { return (rng.next() >> 63) ? 2 : 1; });
}

EdgeColoring transport_coloring(const Graph& source, const EdgeColoring& coloring,
                                const Graph& target, std::span<const Vertex> mapping) {
  if (!coloring.matches(source))
    throw Error(ErrorCode::kInvalidArgument, "coloring does not belong to source graph");
  if (mapping.size() != source.vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "mapping size mismatch");
  std::vector<ColoredEdge> moved;
  for (const auto& ce : coloring.edges()) {
    const Vertex u = mapping[ce.edge.u], v = mapping[ce.edge.v];
    if (u >= target.vertex_count() || v >= target.vertex_count() || !target.adjacent(u, v))
      throw Error(ErrorCode::kInvalidArgument, "mapping is not an isomorphism");
    moved.push_back({Edge(u, v), ce.color});
  }
  return EdgeColoring::from_edges(target, coloring.color_count(), moved);
}

}  // namespace ncrainbow
