#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace ncrainbow::oracle {

Rational pair_summation_failure_bound(const Group& g, std::size_t k) {
  const std::size_t n = g.order();
  auto commutes = [&g](Element a, Element b) {
    return g.multiply(a, b) == g.multiply(b, a);
  };
  std::vector<Element> noncentral;
  for (Element x = 0; x < n; ++x) {
    bool central = true;
    for (Element y = 0; y < n; ++y) central = central && commutes(x, y);
    if (!central) noncentral.push_back(x);
  }
  Rational total = 0;
  for (std::size_t i = 0; i < noncentral.size(); ++i)
    for (std::size_t j = i + 1; j < noncentral.size(); ++j) {
      const Element x = noncentral[i], y = noncentral[j];
      std::size_t t = 0;
      for (Element z = 0; z < n; ++z)
        if (!commutes(x, z) && !commutes(y, z)) ++t;
      const bool adjacent = !commutes(x, y);
      // Probability that fewer than (adjacent ? k-1 : k) of the t
      // two-edge paths are bichromatic.
      const std::size_t need = adjacent ? k - 1 : k;
      BigInt ways = 0, c = 1;
      for (std::size_t r = 0; r < need && r <= t; ++r) {
        ways += c;
        c = c * (t - r) / (r + 1);
      }
      total += Rational(ways, BigInt(1) << t);
    }
  return total;
}

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::size_t start = n, remaining = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v]) {
      ++remaining;
      if (start == n) start = v;
    }
  if (remaining <= 1) return true;
  std::deque<std::size_t> q{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop_front();
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && !seen[v] && g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        seen[v] = true;
        ++reached;
        q.push_back(v);
      }
  }
  return reached == remaining;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  bool complete = true;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) complete = complete && g.adjacent(u, v);
  if (complete) return n - 1;
  for (std::size_t size = 0; size < n; ++size) {
    // All subsets of the given size via a selection mask.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      if (n - size >= 2 && !connected_without(g, mask)) return size;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return n - 1;
}

bool isomorphic(const Graph& g1, const Graph& g2) {
  const std::size_t n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        ok = g1.adjacent(u, v) == g2.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Path> rainbow_paths(const Graph& g, const EdgeColoring& col, Vertex x, Vertex y,
                                std::size_t max_len) {
  std::vector<Path> all;
  Path current{x};
  std::vector<bool> on(g.vertex_count(), false);
  on[x] = true;
  std::function<void(Vertex)> walk = [&](Vertex u) {
    if (u == y) {
      all.push_back(current);
      return;
    }
    if (current.size() - 1 == max_len) return;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (on[v] || !g.adjacent(u, v)) continue;
      on[v] = true;
      current.push_back(v);
      walk(v);
      current.pop_back();
      on[v] = false;
    }
  };
  walk(x);
  std::vector<Path> out;
  for (const Path& p : all) {
    std::set<Color> colors;
    bool rainbow = true;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      rainbow = rainbow && colors.insert(col.color(p[i], p[i + 1])).second;
    if (rainbow) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Element>> group_isomorphism(const Group& a, const Group& b) {
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;

  std::vector<Element> gens;
  std::vector<bool> in_subgroup(n, false);
  in_subgroup[0] = true;
  auto close = [&] {
    std::deque<Element> q;
    for (Element x = 0; x < n; ++x)
      if (in_subgroup[x]) q.push_back(x);
    while (!q.empty()) {
      const Element x = q.front();
      q.pop_front();
      for (Element g : gens) {
        const Element y = a.multiply(x, g);
        if (!in_subgroup[y]) {
          in_subgroup[y] = true;
          q.push_back(y);
        }
      }
    }
  };
  for (Element x = 0; x < n; ++x)
    if (!in_subgroup[x]) {
      gens.push_back(x);
      close();
    }

  std::vector<Element> images(gens.size());
  std::optional<std::vector<Element>> found;
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (found) return;
    if (i == gens.size()) {
      std::vector<Element> map(n, static_cast<Element>(n));
      map[0] = 0;
      std::deque<Element> q{0};
      while (!q.empty()) {
        const Element x = q.front();
        q.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          const Element y = a.multiply(x, gens[k]);
          const Element image = b.multiply(map[x], images[k]);
          if (map[y] == n) {
            map[y] = image;
            q.push_back(y);
          } else if (map[y] != image) {
            return;
          }
        }
      }
      std::vector<bool> hit(n, false);
      for (Element v : map) {
        if (v == n || hit[v]) return;
        hit[v] = true;
      }
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (map[a.multiply(x, y)] != b.multiply(map[x], map[y])) return;
      found = map;
      return;
    }
    for (Element c = 0; c < n; ++c)
      if (b.element_order(c) == a.element_order(gens[i])) {
        images[i] = c;
        assign(i + 1);
        if (found) return;
      }
  };
  assign(0);
  return found;
}

std::size_t center_size(const Group& g) {
  std::size_t count = 0;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order(); ++x)
      central = central && g.multiply(z, x) == g.multiply(x, z);
    count += central;
  }
  return count;
}

}  // namespace ncrainbow::oracle
