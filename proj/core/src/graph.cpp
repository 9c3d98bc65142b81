#include "ncrainbow/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

#include "ncrainbow/error.hpp"

namespace ncrainbow {

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  std::vector<Vertex> out;
  const auto r = row(u);
  for (std::size_t i = 0; i < words_; ++i)
    for (std::uint64_t w = r[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
  return out;
}

std::size_t Graph::common_neighbor_count(Vertex u, Vertex v) const {
  const auto a = row(u), b = row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::vector<Vertex> Graph::common_neighbors(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  const auto a = row(u), b = row(v);
  for (std::size_t i = 0; i < words_; ++i)
    for (std::uint64_t w = a[i] & b[i]; w != 0; w &= w - 1)
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t vertex_count) {
  std::vector<std::string> labels(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) labels[i] = std::to_string(i);
  *this = GraphBuilder(std::move(labels));
}

GraphBuilder::GraphBuilder(std::vector<std::string> labels) {
  graph_.n_ = labels.size();
  graph_.words_ = (graph_.n_ + 63) / 64;
  graph_.bits_.assign(graph_.n_ * graph_.words_, 0);
  graph_.labels_ = std::move(labels);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v, bool strict) {
  if (u >= graph_.n_ || v >= graph_.n_)
    throw Error(ErrorCode::kInvalidArgument,
                "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
  if (graph_.adjacent(u, v)) {
    if (strict)
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    return *this;
  }
  const std::size_t w = graph_.words_;
  graph_.bits_[u * w + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  graph_.bits_[v * w + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++graph_.edge_count_;
  return *this;
}

Graph GraphBuilder::build() && {
  std::set<std::string_view> seen;
  for (const auto& l : graph_.labels_)
    if (!seen.insert(l).second)
      throw Error(ErrorCode::kInvalidArgument, "duplicate vertex label '" + l + "'");
  return std::move(graph_);
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph edgeless_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

Graph complete_multipartite(std::span<const std::size_t> part_sizes) {
  if (part_sizes.empty())
    throw Error(ErrorCode::kInvalidArgument, "complete multipartite graph needs a part");
  std::vector<std::string> labels;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] == 0)
      throw Error(ErrorCode::kInvalidArgument, "part sizes must be positive");
    for (std::size_t i = 0; i < part_sizes[p]; ++i) {
      labels.push_back(std::to_string(p) + ":" + std::to_string(i));
      part_of.push_back(p);
    }
  }
  GraphBuilder b(std::move(labels));
  const auto n = static_cast<Vertex>(part_of.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return std::move(b).build();
}

Graph lexicographic_product(const Graph& base, const Graph& fiber) {
  const std::size_t nb = base.vertex_count(), nf = fiber.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(nb * nf);
  for (Vertex b = 0; b < nb; ++b)
    for (Vertex f = 0; f < nf; ++f)
      labels.push_back("(" + base.label(b) + "," + fiber.label(f) + ")");
  GraphBuilder out(std::move(labels));
  const auto at = [nf](Vertex b, Vertex f) { return static_cast<Vertex>(b * nf + f); };
  for (Vertex b = 0; b < nb; ++b) {
    for (const Edge& e : fiber.edges()) out.add_edge(at(b, e.u), at(b, e.v));
    for (Vertex b2 : base.neighbors(b)) {
      if (b2 < b) continue;
      for (Vertex f = 0; f < nf; ++f)
        for (Vertex f2 = 0; f2 < nf; ++f2) out.add_edge(at(b, f), at(b2, f2));
    }
  }
  return std::move(out).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(std::vector<std::string>(g.labels().begin(), g.labels().end()));
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

// All k-subsets of {1..n}, colex order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  // Enumerate lexicographically then sort by reversed tuple.
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t x = next; x <= n; ++x) {
      current.push_back(x);
      self(self, x + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace

Graph johnson(std::size_t n, std::size_t k) {
  if (k < 1 || k > n)
    throw Error(ErrorCode::kInvalidArgument, "johnson graph needs 1 <= k <= n");
  const auto subsets = colex_subsets(n, k);
  std::vector<std::string> labels;
  for (const auto& s : subsets) {
    std::string l = "{";
    for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
    labels.push_back(l + "}");
  }
  GraphBuilder b(std::move(labels));
  for (Vertex u = 0; u < subsets.size(); ++u)
    for (Vertex v = u + 1; v < subsets.size(); ++v) {
      std::vector<std::size_t> common;
      std::set_intersection(subsets[u].begin(), subsets[u].end(), subsets[v].begin(),
                            subsets[v].end(), std::back_inserter(common));
      if (common.size() + 1 == k) b.add_edge(u, v);
    }
  return std::move(b).build();
}

std::optional<std::vector<std::vector<Vertex>>> multipartite_parts(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    std::vector<Vertex> part;
    for (Vertex v = u; v < n; ++v)
      if (v == u || !g.adjacent(u, v)) part.push_back(v);
    // Non-adjacency must be an equivalence: the part is independent and
    // everything outside it is adjacent to all of it.
    for (Vertex v : part) {
      if (assigned[v]) return std::nullopt;
      assigned[v] = true;
    }
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (g.adjacent(part[i], part[j])) return std::nullopt;
    if (g.degree(u) + part.size() != n) return std::nullopt;
    for (Vertex v : part)
      if (g.degree(v) != g.degree(u)) return std::nullopt;
    parts.push_back(std::move(part));
  }
  // Degrees match and parts are independent, so each vertex is adjacent to
  // every vertex outside its part.
  return parts;
}

std::optional<std::vector<std::size_t>> detect_complete_multipartite(const Graph& g) {
  auto parts = multipartite_parts(g);
  if (!parts) return std::nullopt;
  std::vector<std::size_t> sizes;
  for (const auto& p : *parts) sizes.push_back(p.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

namespace {

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u))
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](std::size_t x) { return x == static_cast<std::size_t>(-1); });
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == static_cast<std::size_t>(-1)) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  std::vector<std::string> labels(n);
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (perm[v] >= n || seen[perm[v]])
      throw Error(ErrorCode::kInvalidArgument, "not a permutation");
    seen[perm[v]] = true;
    labels[perm[v]] = g.label(v);
  }
  GraphBuilder b(std::move(labels));
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

}  // namespace ncrainbow
