#include "ncrainbow/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <vector>

#include "ncrainbow/error.hpp"

namespace ncrainbow {
namespace {

// Split network: vertex v becomes v_in = 2v and v_out = 2v + 1 joined by a
// unit arc; each graph edge uv becomes u_out -> v_in and v_out -> u_in.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.vertex_count(), -1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) add_arc(2 * v, 2 * v + 1);
    for (const Edge& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  std::size_t max_flow(Vertex s, Vertex t, std::size_t cap) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = static_cast<int>(2 * s + 1);  // s_out
    const int sink = static_cast<int>(2 * t);        // t_in
    std::size_t total = 0;
    std::vector<int> via(head_.size());
    while (total < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[source] = -2;
      while (!queue.empty() && via[sink] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a != -1; a = next_[a]) {
          const int y = to_[a];
          if (via[y] == -1 && residual(a) > 0) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int y = sink; y != source;) {
        const int a = via[y];
        ++flow_[a];
        --flow_[a ^ 1];
        y = to_[a ^ 1];
      }
      ++total;
    }
    return total;
  }

 private:
  void add_arc(std::size_t from, std::size_t to) {
    for (int dir = 0; dir < 2; ++dir) {
      const auto x = static_cast<int>(dir == 0 ? from : to);
      to_.push_back(static_cast<int>(dir == 0 ? to : from));
      capacity_.push_back(dir == 0 ? 1 : 0);
      flow_.push_back(0);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size() - 1);
    }
  }
  int residual(int a) const { return capacity_[a] - flow_[a]; }

  std::vector<int> head_, next_, to_, capacity_, flow_;
};

// Minimum over the Even-bounded pair set, never exceeding `limit`.
std::size_t connectivity_up_to(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  if (g.is_complete()) return std::min(limit, n - 1);
  SplitNetwork net(g);
  std::size_t best = std::min(limit, n - 1);
  for (Vertex i = 0; i < n && i <= best; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, net.max_flow(i, j, best));
      if (best == 0) return 0;
    }
  return best;
}

}  // namespace

std::size_t vertex_disjoint_paths(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  if (s == t || s >= g.vertex_count() || t >= g.vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "need two distinct vertices");
  if (g.adjacent(s, t))
    throw Error(ErrorCode::kInvalidArgument, "vertex-disjoint paths need non-adjacent ends");
  return SplitNetwork(g).max_flow(s, t, cap);
}

std::size_t vertex_connectivity(const Graph& g) {
  return connectivity_up_to(g, static_cast<std::size_t>(-1));
}

bool vertex_connectivity_at_least(const Graph& g, std::size_t k) {
  return connectivity_up_to(g, k) >= k;
}

}  // namespace ncrainbow
