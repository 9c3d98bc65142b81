#include "ncrainbow/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ncrainbow/error.hpp"

namespace ncrainbow {
namespace {

using Colors = std::vector<std::uint32_t>;

class Search {
 public:
  Search(const Graph& g1, const Graph& g2, const IsomorphismOptions& options)
      : g1_(g1), g2_(g2), options_(options),
        adj1_(adjacency_lists(g1)), adj2_(adjacency_lists(g2)) {}

  std::optional<std::vector<Vertex>> run() {
    Colors c1(g1_.vertex_count()), c2(g2_.vertex_count());
    for (Vertex v = 0; v < c1.size(); ++v) c1[v] = static_cast<std::uint32_t>(g1_.degree(v));
    for (Vertex v = 0; v < c2.size(); ++v) c2[v] = static_cast<std::uint32_t>(g2_.degree(v));
    return descend(std::move(c1), std::move(c2));
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  static std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<Vertex>> out(g.vertex_count());
    for (Vertex v = 0; v < out.size(); ++v) out[v] = g.neighbors(v);
    return out;
  }

  // Joint colour refinement until the number of classes stops growing.
  // Returns false as soon as the colour histograms of the two graphs differ.
  bool refine(Colors& c1, Colors& c2) const {
    std::size_t classes = 0;
    for (;;) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      auto signatures = [](const Colors& c, const auto& adj) {
        std::vector<std::vector<std::uint32_t>> sig(c.size());
        for (std::size_t v = 0; v < c.size(); ++v) {
          sig[v].reserve(adj[v].size() + 1);
          for (Vertex u : adj[v]) sig[v].push_back(c[u]);
          std::sort(sig[v].begin(), sig[v].end());
          sig[v].insert(sig[v].begin(), c[v]);
        }
        return sig;
      };
      auto s1 = signatures(c1, adj1_);
      auto s2 = signatures(c2, adj2_);
      for (const auto& s : s1) ids.emplace(s, 0);
      for (const auto& s : s2) ids.emplace(s, 0);
      std::uint32_t next = 0;
      for (auto& [key, id] : ids) id = next++;

      std::vector<std::size_t> hist(ids.size(), 0);
      for (std::size_t v = 0; v < c1.size(); ++v) ++hist[c1[v] = ids[s1[v]]];
      for (std::size_t v = 0; v < c2.size(); ++v) {
        c2[v] = ids[s2[v]];
        if (hist[c2[v]]-- == 0) return false;
      }
      if (ids.size() == classes) return true;
      classes = ids.size();
    }
  }

  std::optional<std::vector<Vertex>> descend(Colors c1, Colors c2) {
    if (++nodes_ > options_.node_budget)
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "isomorphism search exceeded " + std::to_string(options_.node_budget) +
                      " nodes");
    if (!refine(c1, c2)) return std::nullopt;

    const std::size_t n = c1.size();
    std::map<std::uint32_t, std::size_t> cell_size;
    for (auto c : c1) ++cell_size[c];

    if (cell_size.size() == n) {
      std::vector<Vertex> image_of_color(n);
      for (Vertex w = 0; w < n; ++w) image_of_color[c2[w]] = w;
      std::vector<Vertex> mapping(n);
      for (Vertex v = 0; v < n; ++v) mapping[v] = image_of_color[c1[v]];
      if (is_isomorphism(g1_, g2_, mapping)) return mapping;
      return std::nullopt;
    }

    std::uint32_t target = 0;
    std::size_t best = n + 1;
    for (auto [color, size] : cell_size)
      if (size > 1 && size < best) {
        best = size;
        target = color;
      }
    const auto v = static_cast<Vertex>(std::find(c1.begin(), c1.end(), target) - c1.begin());
    const std::uint32_t fresh =
        std::max(*std::max_element(c1.begin(), c1.end()),
                 *std::max_element(c2.begin(), c2.end())) + 1;
    for (Vertex w = 0; w < n; ++w) {
      if (c2[w] != target) continue;
      Colors n1 = c1, n2 = c2;
      n1[v] = fresh;
      n2[w] = fresh;
      if (auto found = descend(std::move(n1), std::move(n2))) return found;
    }
    return std::nullopt;
  }

  const Graph& g1_;
  const Graph& g2_;
  IsomorphismOptions options_;
  std::vector<std::vector<Vertex>> adj1_, adj2_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping) {
  const std::size_t n = g1.vertex_count();
  if (g2.vertex_count() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : mapping) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g1.adjacent(u, v) != g2.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

IsomorphismResult are_isomorphic(const Graph& g1, const Graph& g2,
                                 const IsomorphismOptions& options) {
  IsomorphismResult result;
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
    return result;
  Search search(g1, g2, options);
  result.mapping = search.run();
  result.nodes_visited = search.nodes();
  return result;
}

}  // namespace ncrainbow
