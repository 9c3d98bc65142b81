#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncrainbow/group.hpp"
#include "ncrainbow/group_catalog.hpp"

namespace ncrainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Union bound on the probability that a uniform random 2-coloring of the
// non-commuting graph lacks k internally disjoint rainbow paths of length <= 2
// for some pair:
//   sum_{x~y}  sum_{i<=k-2} C(tau,i) 2^-tau  +  sum_{x!~y} sum_{i<=k-1} C(tau,i) 2^-tau
// over unordered pairs of distinct non-central elements. Throws AbelianGroup.
Rational failure_bound(const Group& g, std::size_t k);

// The k = 2 value accumulated like the original GAP loop: ordered pairs,
// tau from centralizer unions, commuting tested on the elements, halved.
Rational failure_bound_ordered_pairs(const Group& g);

// n^3 < 2^(n/6 + 2), decided as n^18 < 2^(n + 12).
bool coarse_bound_holds(std::size_t n);

// (1/4)(n - z)(n^2 - 2z - zn - 2) * (1/2)^(n/6), kept as an exact prefactor
// and the exponent n/6.
struct MidBound {
  std::size_t n = 0;
  std::size_t z = 0;
  Rational prefactor;

  // prefactor * 2^(-n/6) when 6 divides n.
  std::optional<Rational> value() const;
  // prefactor * 2^(-n/6) < 1, via prefactor^6 < 2^n.
  bool less_than_one() const;
  // prefactor * 2^(-n/6) <= n^3 * 2^(-n/6 - 2), i.e. prefactor <= n^3 / 4.
  bool at_most_coarse() const;
  bool below_coarse() const;
};

// Requires 1 <= z <= n and z | n; throws InvalidArgument otherwise.
MidBound mid_bound(std::size_t n, std::size_t z);

// sum_{i=2}^{k+1} n^i < 2^(n/6), decided as (sum)^6 < 2^n.
bool threshold_inequality_holds(std::size_t k, std::size_t n);

// Smallest n0 such that the inequality holds for every n >= n0. Beyond the
// point where (n+1)^(6(k+1)) < 2 n^(6(k+1)) the ratio (sum)^6 / 2^n is
// decreasing, so a scan up to there (and up to the first success after it)
// settles all larger n.
std::size_t threshold_for_k(std::size_t k);

struct BoundReport {
  std::string id;
  std::size_t order = 0;
  std::size_t center_size = 0;
  Rational value;
  bool flagged = false;  // value >= 1
};

BoundReport bound_report(const NamedGroup& group, std::size_t k = 2);

// One report per group, in input order. Groups may be evaluated on several
// threads.
std::vector<BoundReport> scan_exception_report(std::span<const NamedGroup> groups,
                                               std::size_t workers = 1);

}  // namespace ncrainbow
