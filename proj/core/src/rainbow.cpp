#include "ncrainbow/rainbow.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "ncrainbow/connectivity.hpp"
#include "ncrainbow/error.hpp"

namespace ncrainbow {
namespace {

class PathEnumerator {
 public:
  PathEnumerator(const Graph& g, const EdgeColoring& col, Vertex y, std::size_t max_len)
      : g_(g), col_(col), y_(y), max_len_(max_len),
        visited_(g.vertex_count(), false), used_(col.color_count() + 1, false) {}

  std::vector<Path> from(Vertex x) {
    path_ = {x};
    visited_[x] = true;
    extend(x);
    return std::move(out_);
  }

 private:
  void extend(Vertex u) {
    const std::size_t len = path_.size() - 1;
    for (Vertex v : g_.neighbors(u)) {
      if (visited_[v]) continue;
      const Color c = col_.color(u, v);
      if (used_[c]) continue;
      if (v == y_) {
        out_.push_back(path_);
        out_.back().push_back(v);
        continue;
      }
      if (len + 2 > max_len_) continue;
      visited_[v] = used_[c] = true;
      path_.push_back(v);
      extend(v);
      path_.pop_back();
      visited_[v] = used_[c] = false;
    }
  }

  const Graph& g_;
  const EdgeColoring& col_;
  Vertex y_;
  std::size_t max_len_;
  std::vector<bool> visited_;
  std::vector<bool> used_;
  Path path_;
  std::vector<Path> out_;
};

// Direct edge plus one length-2 path per common neighbour whose two edges
// differ in color. These are internally disjoint by construction.
std::vector<Path> short_rainbow_paths(const Graph& g, const EdgeColoring& col, Vertex x,
                                      Vertex y, std::size_t max_len) {
  std::vector<Path> out;
  if (max_len >= 1 && g.adjacent(x, y)) out.push_back({x, y});
  if (max_len >= 2)
    for (Vertex z : g.common_neighbors(x, y))
      if (col.color(x, z) != col.color(z, y)) out.push_back({x, z, y});
  return out;
}

// Largest family of pairwise internally disjoint paths, stopping once
// `target` is reached.
class DisjointSelector {
 public:
  DisjointSelector(const std::vector<Path>& paths, std::size_t vertex_count)
      : paths_(paths), words_((vertex_count + 63) / 64), masks_(paths.size()) {
    for (std::size_t p = 0; p < paths.size(); ++p) {
      masks_[p].assign(words_, 0);
      for (std::size_t i = 1; i + 1 < paths[p].size(); ++i)
        masks_[p][paths[p][i] >> 6] |= std::uint64_t{1} << (paths[p][i] & 63);
    }
  }

  std::vector<std::size_t> select(std::size_t target) {
    target_ = target;
    best_.clear();
    chosen_.clear();
    occupied_.assign(words_, 0);
    search(0);
    return best_;
  }

 private:
  bool conflicts(std::size_t p) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (masks_[p][w] & occupied_[w]) return true;
    return false;
  }

  void search(std::size_t start) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (best_.size() >= target_) return;
    for (std::size_t p = start; p < paths_.size(); ++p) {
      if (chosen_.size() + (paths_.size() - p) <= best_.size()) return;
      if (conflicts(p)) continue;
      for (std::size_t w = 0; w < words_; ++w) occupied_[w] ^= masks_[p][w];
      chosen_.push_back(p);
      search(p + 1);
      chosen_.pop_back();
      for (std::size_t w = 0; w < words_; ++w) occupied_[w] ^= masks_[p][w];
      if (best_.size() >= target_) return;
    }
  }

  const std::vector<Path>& paths_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<std::uint64_t> occupied_;
  std::vector<std::size_t> chosen_, best_;
  std::size_t target_ = 0;
};

struct PairOutcome {
  bool ok = false;
  std::size_t best = 0;
  std::vector<Path> paths;
};

PairOutcome check_pair(const Graph& g, const EdgeColoring& col, Vertex x, Vertex y,
                       std::size_t k) {
  const std::size_t max_len = std::min<std::size_t>(col.color_count(), g.vertex_count() - 1);
  PairOutcome out;
  if (max_len <= 2) {
    auto paths = short_rainbow_paths(g, col, x, y, max_len);
    out.best = std::min(paths.size(), k);
    out.ok = paths.size() >= k;
    if (out.ok) {
      paths.resize(k);
      out.paths = std::move(paths);
    } else {
      out.best = paths.size();
    }
    return out;
  }
  auto paths = enumerate_rainbow_paths(g, col, x, y, max_len);
  auto picked = DisjointSelector(paths, g.vertex_count()).select(k);
  out.best = picked.size();
  out.ok = picked.size() >= k;
  if (out.ok)
    for (std::size_t p : picked) out.paths.push_back(paths[p]);
  return out;
}

}  // namespace

std::vector<Path> enumerate_rainbow_paths(const Graph& g, const EdgeColoring& col, Vertex x,
                                          Vertex y, std::size_t max_len) {
  if (x == y || x >= g.vertex_count() || y >= g.vertex_count())
    throw Error(ErrorCode::kInvalidArgument, "need two distinct vertices");
  if (!col.matches(g)) throw Error(ErrorCode::kInvalidArgument, "coloring does not match graph");
  if (max_len == 0) return {};
  return PathEnumerator(g, col, y, max_len).from(x);
}

std::size_t max_disjoint_rainbow_paths(const Graph& g, const EdgeColoring& col, Vertex x,
                                       Vertex y, std::size_t max_len, DisjointMethod method) {
  if (method == DisjointMethod::kCounting) {
    if (max_len > 2)
      throw Error(ErrorCode::kInvalidArgument, "counting handles paths of length <= 2 only");
    if (x == y) throw Error(ErrorCode::kInvalidArgument, "need two distinct vertices");
    return short_rainbow_paths(g, col, x, y, max_len).size();
  }
  const auto paths = enumerate_rainbow_paths(g, col, x, y, max_len);
  return DisjointSelector(paths, g.vertex_count()).select(paths.size()).size();
}

RainbowResult is_rainbow_k_connected(const Graph& g, const EdgeColoring& col, std::size_t k,
                                     const VerifyOptions& options) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (!col.matches(g)) throw Error(ErrorCode::kInvalidArgument, "coloring does not match graph");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y = x + 1; y < g.vertex_count(); ++y) pairs.emplace_back(x, y);

  std::vector<PairOutcome> outcomes(pairs.size());
  // Index of the first failing pair; everything before it was checked.
  std::atomic<std::size_t> first_failure{pairs.size()};
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < first_failure.load(); ++i) {
      outcomes[i] = check_pair(g, col, pairs[i].first, pairs[i].second, k);
      if (!outcomes[i].ok) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  if (workers == 1 || pairs.size() < 2 * workers) {
    run_range(0, pairs.size());
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (pairs.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back(run_range, w * chunk, std::min(pairs.size(), (w + 1) * chunk));
    for (auto& t : threads) t.join();
  }

  if (const std::size_t f = first_failure.load(); f < pairs.size())
    return FailureWitness{pairs[f].first, pairs[f].second, outcomes[f].best};

  RainbowCertificate cert;
  cert.k = k;
  cert.colors_used = col.colors_used();
  cert.pairs.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    cert.pairs.push_back({pairs[i].first, pairs[i].second, std::move(outcomes[i].paths)});
  return cert;
}

bool certificate_is_valid(const Graph& g, const EdgeColoring& col,
                          const RainbowCertificate& cert) {
  const std::size_t n = g.vertex_count();
  if (!col.matches(g) || cert.k == 0) return false;
  std::set<std::pair<Vertex, Vertex>> covered;
  for (const PairPaths& pp : cert.pairs) {
    if (pp.x >= pp.y || pp.y >= n) return false;
    if (!covered.insert({pp.x, pp.y}).second) return false;
    if (pp.paths.size() < cert.k) return false;
    std::set<Vertex> interior_seen;
    for (const Path& p : pp.paths) {
      if (p.size() < 2) return false;
      const bool forward = p.front() == pp.x && p.back() == pp.y;
      const bool backward = p.front() == pp.y && p.back() == pp.x;
      if (!forward && !backward) return false;
      std::set<Vertex> on_path(p.begin(), p.end());
      if (on_path.size() != p.size()) return false;
      std::set<Color> colors;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] >= n || p[i + 1] >= n || !g.adjacent(p[i], p[i + 1])) return false;
        if (!colors.insert(col.color(p[i], p[i + 1])).second) return false;
      }
      for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (!interior_seen.insert(p[i]).second) return false;
    }
  }
  return covered.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::optional<EdgeColoring> search_two_coloring(const Graph& g, std::size_t k,
                                                std::uint64_t attempts, std::uint64_t seed,
                                                const SearchOptions& options) {
  if (!vertex_connectivity_at_least(g, k))
    throw Error(ErrorCode::kPreconditionKappa,
                "k = " + std::to_string(k) + " exceeds the vertex connectivity");
  auto passes = [&](std::uint64_t i) {
    const EdgeColoring c = random_two_coloring(g, seed + i);
    return std::holds_alternative<RainbowCertificate>(is_rainbow_k_connected(g, c, k));
  };

  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  std::uint64_t found = attempts;
  if (workers == 1) {
    for (std::uint64_t i = 0; i < attempts; ++i)
      if (passes(i)) {
        found = i;
        break;
      }
  } else {
    // Workers pull indices in order and stop once past the best success, so
    // the lowest passing index is still the one returned.
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{attempts};
    auto worker = [&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= attempts || i >= best.load()) return;
        if (passes(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    found = best.load();
  }
  if (found >= attempts) return std::nullopt;
  return random_two_coloring(g, seed + found);
}

std::size_t rc_lower_bound(const Graph& g, std::size_t k) {
  return (k == 1 && g.is_complete()) ? 1 : 2;
}

Rc2Certificate certify_rc2(const Graph& g, const EdgeColoring& good) {
  if (!good.matches(g))
    throw Error(ErrorCode::kColoringRejected, "coloring does not match graph");
  if (good.color_count() > 2)
    throw Error(ErrorCode::kColoringRejected,
                "coloring declares " + std::to_string(good.color_count()) + " colors");
  auto result = is_rainbow_k_connected(g, good, 2);
  if (const auto* w = std::get_if<FailureWitness>(&result))
    throw Error(ErrorCode::kColoringRejected,
                "pair (" + g.label(w->x) + ", " + g.label(w->y) + ") has only " +
                    std::to_string(w->best) + " disjoint rainbow paths");
  Rc2Certificate out;
  out.lower_bound = rc_lower_bound(g, 2);
  out.rc2 = 2;
  if (!g.is_complete()) out.rc1 = 2;
  out.certificate = std::move(std::get<RainbowCertificate>(result));
  return out;
}

}  // namespace ncrainbow
