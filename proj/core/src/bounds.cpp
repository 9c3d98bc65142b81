#include "ncrainbow/bounds.hpp"

#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "ncrainbow/error.hpp"
#include "ncrainbow/ncgraph.hpp"

namespace ncrainbow {
namespace {

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

BigInt pow(BigInt base, std::size_t e) {
  BigInt out = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1) out *= base;
    base *= base;
  }
  return out;
}

}  // namespace

Rational failure_bound(const Group& g, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  const NonCommutingGraph ncg(g);
  const Graph& graph = ncg.graph();
  // (adjacent, tau) -> number of unordered pairs
  std::map<std::pair<bool, std::size_t>, std::size_t> histogram;
  for (Vertex x = 0; x < graph.vertex_count(); ++x)
    for (Vertex y = x + 1; y < graph.vertex_count(); ++y)
      ++histogram[{graph.adjacent(x, y), graph.common_neighbor_count(x, y)}];

  Rational total = 0;
  for (const auto& [key, count] : histogram) {
    const auto [adjacent, t] = key;
    // Adjacent pairs already have the direct edge, so they need k - 1 paths
    // of length 2; failure means at most k - 2 bichromatic common neighbours.
    const std::size_t failing_max = adjacent ? k - 1 : k;
    BigInt ways = 0;
    for (std::size_t i = 0; i < failing_max; ++i) ways += binomial(t, i);
    total += Rational(ways * count, pow2(t));
  }
  return total;
}

Rational failure_bound_ordered_pairs(const Group& g) {
  const ElementSet z = center(g);
  if (z.size() == g.order())
    throw Error(ErrorCode::kAbelianGroup, "abelian group has no non-commuting graph");
  Rational non_commuting = 0, commuting = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    for (Element y = 0; y < g.order(); ++y) {
      if (z.contains(y) || x == y) continue;
      const std::size_t t = tau_from_centralizers(g, x, y);
      if (!g.commute(x, y))
        non_commuting += Rational(1, pow2(t));
      else
        commuting += Rational(1 + t, pow2(t));
    }
  }
  return (commuting + non_commuting) / 2;
}

bool coarse_bound_holds(std::size_t n) {
  return pow(BigInt(n), 18) < pow2(n + 12);
}

MidBound mid_bound(std::size_t n, std::size_t z) {
  if (n == 0 || z == 0 || z > n || n % z != 0)
    throw Error(ErrorCode::kInvalidArgument,
                "mid_bound needs 1 <= z <= n with z | n (n = " + std::to_string(n) +
                    ", z = " + std::to_string(z) + ")");
  const BigInt bn(n), bz(z);
  MidBound m;
  m.n = n;
  m.z = z;
  m.prefactor = Rational((bn - bz) * (bn * bn - 2 * bz - bz * bn - 2), 4);
  return m;
}

std::optional<Rational> MidBound::value() const {
  if (n % 6 != 0) return std::nullopt;
  return prefactor / Rational(pow2(n / 6));
}

bool MidBound::less_than_one() const {
  if (prefactor < 0) return true;
  // (p/q)^6 < 2^n  <=>  p^6 < 2^n q^6
  const BigInt p = boost::multiprecision::numerator(prefactor);
  const BigInt q = boost::multiprecision::denominator(prefactor);
  return pow(p, 6) < pow2(n) * pow(q, 6);
}

bool MidBound::at_most_coarse() const {
  return prefactor <= Rational(pow(BigInt(n), 3), 4);
}

bool MidBound::below_coarse() const {
  return prefactor < Rational(pow(BigInt(n), 3), 4);
}

bool threshold_inequality_holds(std::size_t k, std::size_t n) {
  BigInt sum = 0;
  for (std::size_t i = 2; i <= k + 1; ++i) sum += pow(BigInt(n), i);
  return pow(sum, 6) < pow2(n);
}

std::size_t threshold_for_k(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "threshold_for_k needs k >= 2");
  const std::size_t e = 6 * (k + 1);
  // First n from which (1 + 1/n)^e < 2; the left side decreases in n, so it
  // holds for every larger n too.
  std::size_t monotone_from = 1;
  while (!(pow(BigInt(monotone_from + 1), e) < 2 * pow(BigInt(monotone_from), e)))
    ++monotone_from;
  std::size_t last_failure = 0;
  std::size_t n = 1;
  for (;; ++n) {
    const bool holds = threshold_inequality_holds(k, n);
    if (!holds) last_failure = n;
    if (holds && n >= monotone_from) break;
  }
  return last_failure + 1;
}

BoundReport bound_report(const NamedGroup& group, std::size_t k) {
  BoundReport r;
  r.id = group.id;
  r.order = group.group.order();
  r.center_size = center(group.group).size();
  r.value = failure_bound(group.group, k);
  r.flagged = r.value >= 1;
  return r;
}

std::vector<BoundReport> scan_exception_report(std::span<const NamedGroup> groups,
                                               std::size_t workers) {
  std::vector<BoundReport> out(groups.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < groups.size(); ++i) out[i] = bound_report(groups[i]);
    return out;
  }
  std::vector<std::thread> threads;
  std::mutex error_mutex;
  std::exception_ptr error;
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < groups.size(); i += workers) {
        try {
          out[i] = bound_report(groups[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace ncrainbow
