#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncrainbow/coloring.hpp"
#include "ncrainbow/group_catalog.hpp"
#include "ncrainbow/rainbow.hpp"

namespace ncrainbow::reproduce {

struct Options {
  // Quick mode caps the random-search sweep at order 48 and uses 50 random
  // graphs for the oracle comparison instead of 200.
  bool quick = false;
  std::filesystem::path fixtures_dir;
  std::size_t workers = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Every *.cay file in `dir`, id = file stem, sorted by id.
std::vector<NamedGroup> load_group_directory(const std::filesystem::path& dir);

// Non-abelian fixtures from `dir`, split by whether the group is isomorphic
// to a member of exception_groups().
struct FixtureSplit {
  std::vector<NamedGroup> exceptional;
  std::vector<NamedGroup> ordinary;
};
FixtureSplit split_fixtures(const std::filesystem::path& dir);

// Non-abelian suite used by the common-neighbour check.
std::vector<NamedGroup> lemma21_suite(const std::filesystem::path& fixtures_dir);

// A rainbow 2-connected 2-coloring of `g` obtained by transporting one of
// the explicit constructions along an isomorphism (complete multipartite
// K_{m[l],ln} or J(6,2) o complement(K_2)); nullopt if neither applies.
std::optional<EdgeColoring> explicit_two_coloring(const Graph& g);

CriterionResult lemma21_bound(const Options& options);
CriterionResult lemma23_structure(const Options& options);
CriterionResult lemma22_isomorphism(const Options& options);
CriterionResult prop24_grid(const Options& options);
CriterionResult k3_exclusion(const Options& options);
CriterionResult exception_scan(const Options& options);
CriterionResult j62_certificate(const Options& options);
CriterionResult constructive_search(const Options& options);
CriterionResult inequality_chain(const Options& options);
CriterionResult higher_k(const Options& options);
CriterionResult oracle_equivalences(const Options& options);

// Runs all criteria in order, writing one line per criterion to `log` as it
// completes (if non-null).
std::vector<CriterionResult> run_all(const Options& options, std::ostream* log = nullptr);

std::string format_line(const CriterionResult& r);

}  // namespace ncrainbow::reproduce
