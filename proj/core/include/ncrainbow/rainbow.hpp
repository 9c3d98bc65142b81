#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ncrainbow/coloring.hpp"
#include "ncrainbow/graph.hpp"

namespace ncrainbow {

using Path = std::vector<Vertex>;

// All simple x-y paths of at most `max_len` edges whose edge colors are
// pairwise distinct, in lexicographic order of vertex sequence.
std::vector<Path> enumerate_rainbow_paths(const Graph& g, const EdgeColoring& col,
                                          Vertex x, Vertex y, std::size_t max_len);

struct PairPaths {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Path> paths;
};

struct RainbowCertificate {
  std::size_t k = 0;
  std::size_t colors_used = 0;
  std::vector<PairPaths> pairs;  // every x < y, in order
};

struct FailureWitness {
  Vertex x = 0;
  Vertex y = 0;
  // Most internally disjoint rainbow paths found for the pair.
  std::size_t best = 0;
};

using RainbowResult = std::variant<RainbowCertificate, FailureWitness>;

struct VerifyOptions {
  // Pairs are split across this many threads; the result does not depend on it.
  std::size_t workers = 1;
};

// Rainbow paths are capped at color_count edges. With at most two colors
// the pair test is a count over the direct edge plus bichromatic common
// neighbours; otherwise a backtracking selection over enumerated paths.
RainbowResult is_rainbow_k_connected(const Graph& g, const EdgeColoring& col, std::size_t k,
                                     const VerifyOptions& options = {});

enum class DisjointMethod { kCounting, kBacktracking };

// Maximum number of pairwise internally disjoint rainbow x-y paths with at
// most `max_len` edges. kCounting only supports max_len <= 2.
std::size_t max_disjoint_rainbow_paths(const Graph& g, const EdgeColoring& col, Vertex x,
                                       Vertex y, std::size_t max_len, DisjointMethod method);

// Independent re-validation of a certificate: endpoints, edge existence,
// simplicity, rainbow condition, internal disjointness and pair coverage.
bool certificate_is_valid(const Graph& g, const EdgeColoring& col,
                          const RainbowCertificate& cert);

struct SearchOptions {
  std::size_t workers = 1;
};

// Tries random_two_coloring(g, seed + i) for i = 0..attempts-1. With one
// worker the lowest passing index is returned; with several, any verified
// success may be. Throws PreconditionKappa when k > kappa(g).
std::optional<EdgeColoring> search_two_coloring(const Graph& g, std::size_t k,
                                                std::uint64_t attempts, std::uint64_t seed,
                                                const SearchOptions& options = {});

// 1 for k = 1 on a complete graph, otherwise 2: one color gives only
// length-1 rainbow paths, at most one per pair.
std::size_t rc_lower_bound(const Graph& g, std::size_t k);

struct Rc2Certificate {
  std::size_t lower_bound = 0;
  std::size_t rc2 = 0;
  // rc(g) = 2 follows for non-complete g.
  std::optional<std::size_t> rc1;
  RainbowCertificate certificate;
};

// Throws ColoringRejected when `good` has more than two colors or fails
// rainbow 2-connectivity.
Rc2Certificate certify_rc2(const Graph& g, const EdgeColoring& good);

}  // namespace ncrainbow
