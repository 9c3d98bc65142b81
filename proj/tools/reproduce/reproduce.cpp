#include "reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ncrainbow/bounds.hpp"
#include "ncrainbow/connectivity.hpp"
#include "ncrainbow/error.hpp"
#include "ncrainbow/io.hpp"
#include "ncrainbow/isomorphism.hpp"
#include "ncrainbow/ncgraph.hpp"
#include "oracles.hpp"

namespace ncrainbow::reproduce {
namespace {

constexpr std::uint64_t kSearchAttempts = 10'000;
constexpr std::uint64_t kSearchSeed = 1;

// Collects failed expectations; the first few end up in the detail line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_.empty(); }

  std::string detail() const {
    std::ostringstream out;
    out << checks_ << " checks";
    for (const auto& n : notes_) out << "; " << n;
    if (!failures_.empty()) {
      out << "; " << failures_.size() << " failed:";
      for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << " [" << failures_[i] << "]";
    }
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <typename Body>
CriterionResult run_criterion(int id, std::string title, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  Checker check;
  try {
    body(check);
    r.passed = check.passed();
    r.detail = check.detail();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = check.detail() + "; exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool is_certificate(const RainbowResult& r) {
  return std::holds_alternative<RainbowCertificate>(r);
}

std::vector<std::size_t> expected_parts(std::size_t count, std::size_t size, std::size_t big) {
  std::vector<std::size_t> parts(count, size);
  parts.push_back(big);
  std::sort(parts.begin(), parts.end());
  return parts;
}

// rc_2 = 2 for `g` given a 2-coloring: lower bound plus a certificate that
// the independent checker accepts.
bool certifies_rc2(const Graph& g, const EdgeColoring& c) {
  const Rc2Certificate cert = certify_rc2(g, c);
  return cert.lower_bound == 2 && cert.rc2 == 2 && certificate_is_valid(g, c, cert.certificate);
}

}  // namespace

std::vector<NamedGroup> load_group_directory(const std::filesystem::path& dir) {
  std::vector<NamedGroup> out;
  if (dir.empty() || !std::filesystem::is_directory(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cay")
      out.push_back({entry.path().stem().string(), io::load_group(entry.path())});
  std::sort(out.begin(), out.end(),
            [](const NamedGroup& a, const NamedGroup& b) { return a.id < b.id; });
  return out;
}

FixtureSplit split_fixtures(const std::filesystem::path& dir) {
  FixtureSplit out;
  const auto exceptions = exception_groups();
  for (auto& g : load_group_directory(dir)) {
    if (g.group.is_abelian()) continue;
    const bool exceptional = std::any_of(exceptions.begin(), exceptions.end(), [&](const NamedGroup& e) {
      return oracle::group_isomorphism(g.group, e.group).has_value();
    });
    (exceptional ? out.exceptional : out.ordinary).push_back(std::move(g));
  }
  return out;
}

std::vector<NamedGroup> lemma21_suite(const std::filesystem::path& fixtures_dir) {
  std::vector<NamedGroup> suite;
  for (std::size_t n = 3; n <= 16; ++n)
    suite.push_back({"D" + std::to_string(2 * n), dihedral(n)});
  for (std::size_t m = 2; m <= 8; ++m)
    suite.push_back({"Q" + std::to_string(4 * m), dicyclic(m)});
  for (std::int64_t t : {3, 5, 7})
    suite.push_back({"M(8," + std::to_string(t) + ")", metacyclic(8, t)});
  suite.push_back({"D6xZ3", direct_product(dihedral(3), cyclic(3))});
  suite.push_back({"D8xZ3", direct_product(dihedral(4), cyclic(3))});
  suite.push_back({"Q8xZ3", direct_product(dicyclic(2), cyclic(3))});
  for (auto& g : extraspecial32_groups()) suite.push_back(std::move(g));
  for (auto& g : load_group_directory(fixtures_dir))
    if (!g.group.is_abelian()) suite.push_back(std::move(g));
  return suite;
}

std::optional<EdgeColoring> explicit_two_coloring(const Graph& g) {
  if (const auto parts = detect_complete_multipartite(g)) {
    if (const auto spec = partition_spec_for(*parts)) {
      const ColoredGraph model = prop24_coloring(*spec);
      const auto iso = are_isomorphic(model.graph, g);
      if (iso.mapping) return transport_coloring(model.graph, model.coloring, g, *iso.mapping);
    }
    return std::nullopt;
  }
  const ColoredGraph j62 = j62_graph_and_coloring();
  if (g.vertex_count() != j62.graph.vertex_count()) return std::nullopt;
  const auto iso = are_isomorphic(j62.graph, g);
  if (!iso.mapping) return std::nullopt;
  return transport_coloring(j62.graph, j62.coloring, g, *iso.mapping);
}

CriterionResult lemma21_bound(const Options& options) {
  return run_criterion(1, "common-neighbour bound 6*tau >= |G| and centralizer identity",
                       [&](Checker& check) {
    const auto suite = lemma21_suite(options.fixtures_dir);
    std::size_t pairs = 0;
    for (const auto& g : suite) {
      const CommonNeighborReport r = lemma21_check(g.group);
      pairs += r.pairs_checked;
      check.expect(r.identity_holds, g.id + ": tau identity");
      check.expect(6 * r.min_tau >= g.group.order(), g.id + ": 6*min tau >= |G|");
    }
    check.note(std::to_string(suite.size()) + " groups, " + std::to_string(pairs) + " pairs");
  });
}

CriterionResult lemma23_structure(const Options&) {
  return run_criterion(2, "dihedral/dicyclic graphs are the predicted complete multipartite graphs",
                       [&](Checker& check) {
    for (std::size_t n : {3, 5, 7, 9}) {
      const auto parts = detect_complete_multipartite(noncommuting_graph(dihedral(n)).graph());
      check.expect(parts == expected_parts(n, 1, n - 1), "D" + std::to_string(2 * n));
    }
    for (std::size_t n : {4, 6, 8, 10}) {
      const auto parts = detect_complete_multipartite(noncommuting_graph(dihedral(n)).graph());
      check.expect(parts == expected_parts(n / 2, 2, n - 2), "D" + std::to_string(2 * n));
    }
    for (std::size_t m = 2; m <= 6; ++m) {
      const auto parts = detect_complete_multipartite(noncommuting_graph(dicyclic(m)).graph());
      check.expect(parts == expected_parts(m, 2, 2 * m - 2), "Q" + std::to_string(4 * m));
    }
  });
}

CriterionResult lemma22_isomorphism(const Options&) {
  return run_criterion(3, "natural map Gamma_{GxZn} -> Gamma_G o complement(K_n) is an isomorphism",
                       [&](Checker& check) {
    const std::vector<std::pair<NamedGroup, std::size_t>> cases = {
        {{"D6", dihedral(3)}, 2}, {{"D6", dihedral(3)}, 3},
        {{"D8", dihedral(4)}, 3}, {{"Q8", dicyclic(2)}, 3}};
    for (const auto& [g, n] : cases)
      check.expect(lemma22_check(g.group, n).natural_map_is_isomorphism,
                   g.id + " x Z" + std::to_string(n));
  });
}

CriterionResult prop24_grid(const Options&) {
  return run_criterion(4, "explicit colorings of K_{m[l],ln} are rainbow 2-connected (rc2 = 2)",
                       [&](Checker& check) {
    std::vector<PartitionSpec> grid;
    for (std::size_t l : {2, 3, 4, 5}) grid.push_back({l, 2, 1});
    for (std::size_t l : {1, 2, 3}) grid.push_back({l, 3, 1});
    for (std::size_t l : {1, 2, 3})
      for (std::size_t m : {4, 5, 6}) grid.push_back({l, m, 1});
    for (std::size_t l : {1, 2})
      for (std::size_t m : {3, 4, 5}) grid.push_back({l, m, 2});
    for (std::size_t m : {4, 5}) grid.push_back({1, m, 3});
    for (const auto& spec : grid) {
      const std::string name = "(l,m,n)=(" + std::to_string(spec.l) + "," +
                               std::to_string(spec.m) + "," + std::to_string(spec.n) + ")";
      const ColoredGraph cg = prop24_coloring(spec);
      const auto result = is_rainbow_k_connected(cg.graph, cg.coloring, 2);
      if (const auto* w = std::get_if<FailureWitness>(&result)) {
        check.expect(false, name + " fails at " + cg.graph.label(w->x) + "," + cg.graph.label(w->y));
        continue;
      }
      check.expect(rc_lower_bound(cg.graph, 2) == 2, name + " lower bound");
      check.expect(certificate_is_valid(cg.graph, cg.coloring, std::get<RainbowCertificate>(result)),
                   name + " certificate re-check");
    }
    check.note(std::to_string(grid.size()) + " grid points");
  });
}

CriterionResult k3_exclusion(const Options&) {
  return run_criterion(5, "K3: no 2-coloring is rainbow 2-connected, a 3-coloring is",
                       [&](Checker& check) {
    const Graph k3 = complete_graph(3);
    const auto edges = k3.edges();
    std::size_t two_color_passes = 0, three_color_passes = 0;
    for (std::size_t mask = 0; mask < 8; ++mask) {
      std::vector<ColoredEdge> ce;
      for (std::size_t i = 0; i < 3; ++i)
        ce.push_back({edges[i], static_cast<Color>((mask >> i & 1) + 1)});
      two_color_passes += is_certificate(is_rainbow_k_connected(
          k3, EdgeColoring::from_edges(k3, 2, ce), 2));
    }
    for (std::size_t code = 0; code < 27; ++code) {
      std::vector<ColoredEdge> ce;
      for (std::size_t i = 0, c = code; i < 3; ++i, c /= 3)
        ce.push_back({edges[i], static_cast<Color>(c % 3 + 1)});
      three_color_passes += is_certificate(is_rainbow_k_connected(
          k3, EdgeColoring::from_edges(k3, 3, ce), 2));
    }
    check.expect(two_color_passes == 0, "some 2-coloring of K3 passed");
    check.expect(three_color_passes > 0, "no 3-coloring of K3 passed");
    check.note(std::to_string(three_color_passes) + "/27 three-colorings pass");
  });
}

CriterionResult exception_scan(const Options& options) {
  return run_criterion(6, "failure bound >= 1 exactly on the exception lists, < 1 elsewhere",
                       [&](Checker& check) {
    check.expect(failure_bound(dihedral(3), 2) == Rational(19, 8), "P(D6) = 19/8");
    check.expect(failure_bound(dihedral(4), 2) == Rational(63, 16), "P(D8) = 63/16");

    auto fixtures = split_fixtures(options.fixtures_dir);
    auto exceptions = exception_groups();
    for (auto& g : fixtures.exceptional) exceptions.push_back(std::move(g));
    for (const auto& r : scan_exception_report(exceptions, options.workers))
      check.expect(r.flagged, r.id + " should be flagged, P = " + io::to_string(r.value));

    std::vector<NamedGroup> others = non_exception_suite(112);
    for (auto& g : fixtures.ordinary) others.push_back(std::move(g));
    for (const auto& r : scan_exception_report(others, options.workers))
      check.expect(!r.flagged, r.id + " should pass, P = " + io::to_string(r.value));

    const std::vector<NamedGroup>* lists[] = {&exceptions, &others};
    for (const auto* list : lists)
      for (const auto& g : *list) {
        if (g.group.order() > 64) continue;
        const Rational p = failure_bound(g.group, 2);
        check.expect(p == oracle::pair_summation_failure_bound(g.group, 2), g.id + " vs oracle");
        check.expect(p == failure_bound_ordered_pairs(g.group), g.id + " vs ordered-pair sum");
      }
    check.note(std::to_string(exceptions.size()) + " exceptions, " +
               std::to_string(others.size()) + " others");
  });
}

CriterionResult j62_certificate(const Options&) {
  return run_criterion(7, "J(6,2) o complement(K2) coloring and order-32 isomorphisms",
                       [&](Checker& check) {
    const ColoredGraph j62 = j62_graph_and_coloring();
    check.expect(j62.graph.vertex_count() == 30, "30 vertices");
    check.expect(j62.graph.edge_count() == 240, "240 edges");
    const auto result = is_rainbow_k_connected(j62.graph, j62.coloring, 2);
    check.expect(is_certificate(result) &&
                     certificate_is_valid(j62.graph, j62.coloring, std::get<RainbowCertificate>(result)),
                 "j62 coloring rainbow 2-connected");
    for (const auto& g : extraspecial32_groups()) {
      const auto ncg = noncommuting_graph(g.group);
      const auto iso = are_isomorphic(ncg.graph(), j62.graph);
      check.expect(iso.isomorphic() && is_isomorphism(ncg.graph(), j62.graph, *iso.mapping),
                   g.id + " graph isomorphic to J(6,2) o complement(K2)");
    }
  });
}

CriterionResult constructive_search(const Options& options) {
  return run_criterion(8, "rc2 = 2 certified for every suite group (search or construction)",
                       [&](Checker& check) {
    auto fixtures = split_fixtures(options.fixtures_dir);
    std::vector<NamedGroup> searched = non_exception_suite(options.quick ? 48 : 112);
    for (auto& g : fixtures.ordinary) searched.push_back(std::move(g));
    for (const auto& g : searched) {
      const Graph graph = noncommuting_graph(g.group).graph();
      const auto found = search_two_coloring(graph, 2, kSearchAttempts, kSearchSeed,
                                             {.workers = options.workers});
      check.expect(found && certifies_rc2(graph, *found), g.id + " search");
    }
    auto exceptions = exception_groups();
    for (auto& g : fixtures.exceptional) exceptions.push_back(std::move(g));
    for (const auto& g : exceptions) {
      const Graph graph = noncommuting_graph(g.group).graph();
      const auto coloring = explicit_two_coloring(graph);
      check.expect(coloring && certifies_rc2(graph, *coloring), g.id + " construction");
    }
    check.note(std::to_string(searched.size()) + " searched, " +
               std::to_string(exceptions.size()) + " constructed");
  });
}

CriterionResult inequality_chain(const Options&) {
  return run_criterion(9, "n^3 < 2^(n/6+2) for 114 <= n <= 2000, fails at 108; middle <= coarse",
                       [&](Checker& check) {
    for (std::size_t n = 114; n <= 2000; ++n)
      check.expect(coarse_bound_holds(n), "coarse bound at n = " + std::to_string(n));
    check.expect(!coarse_bound_holds(108), "coarse bound must fail at 108");
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 300; ++n)
      for (std::size_t z = 1; z <= n; ++z)
        if (n % z == 0) {
          ++pairs;
          check.expect(mid_bound(n, z).at_most_coarse(),
                       "(n,z) = (" + std::to_string(n) + "," + std::to_string(z) + ")");
        }
    check.note(std::to_string(pairs) + " (n,z) pairs");
  });
}

CriterionResult higher_k(const Options& options) {
  return run_criterion(10, "k = 3: exact bound, rainbow 3-connected 2-coloring, thresholds",
                       [&](Checker& check) {
    check.expect(failure_bound(dihedral(3), 3) == Rational(55, 8), "P3(D6) = 55/8");
    check.expect(oracle::pair_summation_failure_bound(dihedral(3), 3) == Rational(55, 8),
                 "oracle P3(D6) = 55/8");

    const Graph d14 = noncommuting_graph(dihedral(7)).graph();
    const std::size_t kappa = vertex_connectivity(d14);
    check.expect(kappa >= 3, "kappa(Gamma_D14) >= 3");
    const auto found = search_two_coloring(d14, 3, kSearchAttempts, kSearchSeed,
                                           {.workers = options.workers});
    check.expect(found.has_value(), "search k=3 on Gamma_D14");
    if (found) {
      const auto result = is_rainbow_k_connected(d14, *found, 3);
      check.expect(is_certificate(result) &&
                       certificate_is_valid(d14, *found, std::get<RainbowCertificate>(result)),
                   "k=3 certificate re-check");
      check.expect(rc_lower_bound(d14, 3) == 2, "rc3 lower bound");
    }

    const std::size_t t2 = threshold_for_k(2), t3 = threshold_for_k(3);
    check.expect(t2 == 126, "threshold_for_k(2) = 126");
    check.expect(t3 == 180, "threshold_for_k(3) = 180");
    check.expect(threshold_inequality_holds(2, 126), "k=2 holds at n=126");
    check.expect(!threshold_inequality_holds(2, 120), "k=2 fails at n=120");
    check.note("kappa(Gamma_D14) = " + std::to_string(kappa) + ", thresholds " +
               std::to_string(t2) + "/" + std::to_string(t3));
  });
}

CriterionResult oracle_equivalences(const Options& options) {
  return run_criterion(11, "fast path counting == backtracking; kappa == brute-force cuts",
                       [&](Checker& check) {
    const std::size_t graphs = options.quick ? 50 : 200;
    SplitMix64 rng(20240601);
    std::size_t pairs = 0;
    for (std::size_t t = 0; t < graphs; ++t) {
      const std::size_t n = 2 + rng.next() % 11;  // 2..12
      const std::uint64_t density = 20 + rng.next() % 70;  // percent
      GraphBuilder b(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.next() % 100 < density) b.add_edge(u, v);
      const Graph g = std::move(b).build();
      const EdgeColoring col = random_two_coloring(g, rng.next());
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
          ++pairs;
          const auto fast = max_disjoint_rainbow_paths(g, col, x, y, 2, DisjointMethod::kCounting);
          const auto slow =
              max_disjoint_rainbow_paths(g, col, x, y, 2, DisjointMethod::kBacktracking);
          check.expect(fast == slow, "graph " + std::to_string(t) + " pair " +
                                         std::to_string(x) + "," + std::to_string(y));
        }
      check.expect(vertex_connectivity(g) == oracle::vertex_connectivity(g),
                   "kappa of graph " + std::to_string(t));
    }
    check.note(std::to_string(graphs) + " graphs, " + std::to_string(pairs) + " pairs");
  });
}

std::vector<CriterionResult> run_all(const Options& options, std::ostream* log) {
  using Fn = CriterionResult (*)(const Options&);
  const Fn criteria[] = {lemma21_bound,  lemma23_structure,   lemma22_isomorphism,
                         prop24_grid,    k3_exclusion,        exception_scan,
                         j62_certificate, constructive_search, inequality_chain,
                         higher_k,       oracle_equivalences};
  std::vector<CriterionResult> out;
  for (Fn f : criteria) {
    out.push_back(f(options));
    if (log) *log << format_line(out.back()) << std::endl;
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.title
      << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s; " << r.detail << ")";
  return out.str();
}

}  // namespace ncrainbow::reproduce
