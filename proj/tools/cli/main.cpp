#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/crc.hpp>
#include <nlohmann/json.hpp>

#include "ncrainbow/bounds.hpp"
#include "ncrainbow/coloring.hpp"
#include "ncrainbow/error.hpp"
#include "ncrainbow/io.hpp"
#include "ncrainbow/isomorphism.hpp"
#include "ncrainbow/ncgraph.hpp"
#include "ncrainbow/rainbow.hpp"
#include "reproduce.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ncrainbow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::string crc32_of(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "unreadable";
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  std::ostringstream out;
  out << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return out.str();
}

struct Manifest {
  json doc = {{"command", ""},
              {"parameters", json::object()},
              {"seeds", json::array()},
              {"inputs", json::object()},
              {"outputs", json::object()},
              {"outcome", json::object()}};

  void input(const fs::path& p) { doc["inputs"][p.string()] = crc32_of(p); }
  void output(const fs::path& p) { doc["outputs"][p.string()] = crc32_of(p); }
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kColoringRejected:
    case ErrorCode::kBoundViolated:
    case ErrorCode::kSearchBudgetExceeded:
    case ErrorCode::kInternal:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

void print_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-')
    throw Error(ErrorCode::kInvalidArgument, what + " must be a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw Error(ErrorCode::kInvalidArgument, what + " must be an integer, got '" + s + "'");
  return v;
}

void expect_params(const std::vector<std::string>& params, std::size_t count,
                   const std::string& usage) {
  if (params.size() != count)
    throw Error(ErrorCode::kInvalidArgument, "--params for this family: " + usage);
}

// |H| lines, each a permutation of N's element indices.
std::vector<std::vector<Element>> load_action(const fs::path& path, std::size_t h_order,
                                              std::size_t n_order) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::vector<std::vector<Element>> action;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<Element> row;
    std::string tok;
    while (ls >> tok) row.push_back(static_cast<Element>(parse_size(tok, "action entry")));
    if (row.empty()) continue;
    if (row.size() != n_order)
      throw Error(ErrorCode::kParseError, path.string() + ":" + std::to_string(line_no) +
                                              ": expected " + std::to_string(n_order) + " entries");
    action.push_back(std::move(row));
  }
  if (action.size() != h_order)
    throw Error(ErrorCode::kParseError, path.string() + ": expected " + std::to_string(h_order) +
                                            " permutation lines");
  return action;
}

Group build_group(const std::string& family, const std::vector<std::string>& p, Manifest& m) {
  auto group_file = [&m](const std::string& s) {
    m.input(s);
    return io::load_group(s);
  };
  if (family == "cyclic" || family == "dihedral" || family == "dicyclic") {
    expect_params(p, 1, family == "dicyclic" ? "M" : "N");
    const std::size_t n = parse_size(p[0], family + " parameter");
    if (family == "cyclic") {
      if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cyclic needs n >= 1");
      return cyclic(n);
    }
    return family == "dihedral" ? dihedral(n) : dicyclic(n);
  }
  if (family == "metacyclic") {
    expect_params(p, 2, "M T");
    return metacyclic(parse_size(p[0], "m"), parse_int(p[1], "t"));
  }
  if (family == "direct") {
    expect_params(p, 2, "G.cay H.cay");
    return direct_product(group_file(p[0]), group_file(p[1]));
  }
  if (family == "semidirect") {
    expect_params(p, 3, "N.cay H.cay ACTION");
    const Group n = group_file(p[0]);
    const Group h = group_file(p[1]);
    m.input(p[2]);
    return semidirect_product(n, h, load_action(p[2], h.order(), n.order()));
  }
  if (family == "central") {
    expect_params(p, 4, "G.cay H.cay ZG ZH");
    const Group g = group_file(p[0]);
    const Group h = group_file(p[1]);
    return central_product(g, h, static_cast<Element>(parse_size(p[2], "zG")),
                           static_cast<Element>(parse_size(p[3], "zH")));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + family + "'");
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

json bound_json(const Rational& value, std::size_t k) {
  return {{"k", k},
          {"p_num", numerator(value).str()},
          {"p_den", denominator(value).str()},
          {"p", io::to_string(value)},
          {"flagged", value >= 1}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commuting graphs of finite groups and rainbow connectivity certificates"};
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");

  // group build
  auto* group_cmd = app.add_subcommand("group", "Group construction");
  group_cmd->require_subcommand(1);
  auto* group_build = group_cmd->add_subcommand("build", "Build a group and write its Cayley table");
  std::string family, group_out;
  std::vector<std::string> params;
  group_build->add_option("--family", family, "cyclic|dihedral|dicyclic|metacyclic|direct|semidirect|central")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dihedral", "dicyclic", "metacyclic", "direct", "semidirect",
                             "central"}));
  group_build->add_option("--params", params, "Family parameters")->required();
  group_build->add_option("--out", group_out, "Output .cay file")->required();

  // ncgraph
  auto* ncgraph_cmd = app.add_subcommand("ncgraph", "Write the non-commuting graph of a group");
  std::string group_in, graph_out;
  ncgraph_cmd->add_option("--group", group_in)->required();
  ncgraph_cmd->add_option("--out", graph_out)->required();

  // color
  auto* color_cmd = app.add_subcommand("color", "Explicit 2-colorings");
  color_cmd->require_subcommand(1);
  auto* color_prop = color_cmd->add_subcommand("prop24", "Coloring of K_{m[l],ln}");
  std::size_t spec_l = 0, spec_m = 0, spec_n = 0;
  std::string out_graph, out_coloring;
  color_prop->add_option("--l", spec_l)->required();
  color_prop->add_option("--m", spec_m)->required();
  color_prop->add_option("--n", spec_n)->required();
  color_prop->add_option("--out-graph", out_graph)->required();
  color_prop->add_option("--out-coloring", out_coloring)->required();
  auto* color_j62 = color_cmd->add_subcommand("j62", "Coloring of J(6,2) o complement(K2)");
  color_j62->add_option("--out-graph", out_graph)->required();
  color_j62->add_option("--out-coloring", out_coloring)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check rainbow k-connectivity of a coloring");
  std::string graph_in, coloring_in, cert_out;
  std::size_t k = 2, workers = 1;
  verify_cmd->add_option("--graph", graph_in)->required();
  verify_cmd->add_option("--coloring", coloring_in)->required();
  verify_cmd->add_option("--k", k)->required();
  verify_cmd->add_option("--cert", cert_out, "Write the certificate JSON here");
  verify_cmd->add_option("--workers", workers);

  // search
  auto* search_cmd = app.add_subcommand("search", "Random 2-coloring search");
  std::uint64_t attempts = 0, seed = 0;
  std::string search_out;
  search_cmd->add_option("--graph", graph_in)->required();
  search_cmd->add_option("--k", k)->required();
  search_cmd->add_option("--attempts", attempts)->required();
  search_cmd->add_option("--seed", seed)->required();
  search_cmd->add_option("--workers", workers);
  search_cmd->add_option("--out", search_out, "Write the coloring found here");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Failure bound and inequality checks");
  bounds_cmd->require_subcommand(0, 1);
  bounds_cmd->add_option("--group", group_in);
  bounds_cmd->add_option("--k", k);
  auto* bounds_coarse = bounds_cmd->add_subcommand("coarse", "n^3 < 2^(n/6+2)");
  std::size_t bound_n = 0;
  bounds_coarse->add_option("--n", bound_n)->required();
  auto* bounds_threshold = bounds_cmd->add_subcommand("threshold", "Threshold n0 for k");
  bounds_threshold->add_option("--k", k)->required();

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Failure bounds for every .cay file in a directory");
  std::string groups_dir, scan_out;
  scan_cmd->add_option("--groups", groups_dir)->required();
  scan_cmd->add_option("--out", scan_out)->required();
  scan_cmd->add_option("--k", k);
  scan_cmd->add_option("--workers", workers);

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Graph isomorphism");
  std::string graph2_in;
  std::size_t node_budget = IsomorphismOptions{}.node_budget;
  iso_cmd->add_option("--graph", graph_in)->required();
  iso_cmd->add_option("--graph2", graph2_in)->required();
  iso_cmd->add_option("--budget", node_budget, "Search node budget");

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run every acceptance criterion");
  bool quick = false;
  std::string fixtures = NCRAINBOW_FIXTURES_DIR;
  reproduce_cmd->add_flag("--quick", quick);
  reproduce_cmd->add_option("--fixtures", fixtures, "Directory of extra .cay groups");
  reproduce_cmd->add_option("--workers", workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return kExitUsage;
  }

  Manifest manifest;
  int code = kExitOk;
  try {
    if (group_build->parsed()) {
      manifest.doc["command"] = "group build";
      manifest.doc["parameters"] = {{"family", family}, {"params", params}};
      const Group g = build_group(family, params, manifest);
      io::save(group_out, g);
      manifest.output(group_out);
      manifest.doc["outcome"] = {{"order", g.order()}, {"abelian", g.is_abelian()}};
      std::cout << json{{"order", g.order()}, {"center_size", center(g).size()}}.dump() << "\n";
    } else if (ncgraph_cmd->parsed()) {
      manifest.doc["command"] = "ncgraph";
      manifest.input(group_in);
      const auto ncg = noncommuting_graph(io::load_group(group_in));
      io::save(graph_out, ncg.graph());
      manifest.output(graph_out);
      manifest.doc["outcome"] = {{"vertices", ncg.vertex_count()},
                                 {"edges", ncg.graph().edge_count()}};
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (color_prop->parsed() || color_j62->parsed()) {
      ColoredGraph cg;
      if (color_prop->parsed()) {
        manifest.doc["command"] = "color prop24";
        manifest.doc["parameters"] = {{"l", spec_l}, {"m", spec_m}, {"n", spec_n}};
        cg = prop24_coloring({spec_l, spec_m, spec_n});
      } else {
        manifest.doc["command"] = "color j62";
        cg = j62_graph_and_coloring();
      }
      io::save(out_graph, cg.graph);
      io::save(out_coloring, cg.coloring);
      manifest.output(out_graph);
      manifest.output(out_coloring);
      manifest.doc["outcome"] = {{"vertices", cg.graph.vertex_count()},
                                 {"edges", cg.graph.edge_count()}};
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (verify_cmd->parsed()) {
      manifest.doc["command"] = "verify";
      manifest.doc["parameters"] = {{"k", k}, {"workers", workers}};
      manifest.input(graph_in);
      manifest.input(coloring_in);
      const Graph g = io::load_graph(graph_in);
      const EdgeColoring c = io::load_coloring(coloring_in, g);
      const auto result = is_rainbow_k_connected(g, c, k, {.workers = workers});
      if (const auto* cert = std::get_if<RainbowCertificate>(&result)) {
        if (!certificate_is_valid(g, c, *cert))
          throw Error(ErrorCode::kInternal, "certificate failed independent re-check");
        if (!cert_out.empty()) {
          write_json(cert_out, io::to_json(*cert));
          manifest.output(cert_out);
        }
        manifest.doc["outcome"] = {{"rainbow_k_connected", true}, {"colors_used", cert->colors_used}};
      } else {
        const auto& w = std::get<FailureWitness>(result);
        manifest.doc["outcome"] = {{"rainbow_k_connected", false},
                                   {"witness", {{"x", w.x}, {"y", w.y}, {"best", w.best}}}};
        code = kExitFailed;
      }
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (search_cmd->parsed()) {
      manifest.doc["command"] = "search";
      manifest.doc["parameters"] = {{"k", k}, {"attempts", attempts}, {"workers", workers}};
      manifest.doc["seeds"] = {seed};
      manifest.input(graph_in);
      const Graph g = io::load_graph(graph_in);
      const auto found = search_two_coloring(g, k, attempts, seed, {.workers = workers});
      if (found) {
        if (!search_out.empty()) {
          io::save(search_out, *found);
          manifest.output(search_out);
        }
        manifest.doc["outcome"] = {{"found", true}};
      } else {
        manifest.doc["outcome"] = {{"found", false}};
        code = kExitFailed;
      }
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (bounds_coarse->parsed()) {
      manifest.doc["command"] = "bounds coarse";
      manifest.doc["parameters"] = {{"n", bound_n}};
      manifest.doc["outcome"] = {{"n", bound_n}, {"holds", coarse_bound_holds(bound_n)}};
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (bounds_threshold->parsed()) {
      manifest.doc["command"] = "bounds threshold";
      manifest.doc["parameters"] = {{"k", k}};
      if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
      manifest.doc["outcome"] = {{"k", k}, {"n0", threshold_for_k(k)}};
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (bounds_cmd->parsed()) {
      manifest.doc["command"] = "bounds";
      manifest.doc["parameters"] = {{"k", k}};
      if (group_in.empty())
        throw Error(ErrorCode::kInvalidArgument, "bounds needs --group (or coarse/threshold)");
      manifest.input(group_in);
      const Group g = io::load_group(group_in);
      manifest.doc["outcome"] = bound_json(failure_bound(g, k), k);
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (scan_cmd->parsed()) {
      manifest.doc["command"] = "scan";
      manifest.doc["parameters"] = {{"k", k}, {"workers", workers}};
      std::vector<NamedGroup> groups;
      for (auto& g : reproduce::load_group_directory(groups_dir)) {
        manifest.input(fs::path(groups_dir) / (g.id + ".cay"));
        if (!g.group.is_abelian()) groups.push_back(std::move(g));
      }
      std::vector<BoundReport> reports;
      if (k == 2) {
        reports = scan_exception_report(groups, workers);
      } else {
        for (const auto& g : groups) reports.push_back(bound_report(g, k));
      }
      json out = json::array();
      std::size_t flagged = 0;
      for (const auto& r : reports) {
        out.push_back(io::to_json(r));
        flagged += r.flagged;
      }
      write_json(scan_out, out);
      manifest.output(scan_out);
      manifest.doc["outcome"] = {{"groups", reports.size()}, {"flagged", flagged}};
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (iso_cmd->parsed()) {
      manifest.doc["command"] = "iso";
      manifest.doc["parameters"] = {{"budget", node_budget}};
      manifest.input(graph_in);
      manifest.input(graph2_in);
      const Graph g1 = io::load_graph(graph_in);
      const Graph g2 = io::load_graph(graph2_in);
      const auto r = are_isomorphic(g1, g2, {.node_budget = node_budget});
      manifest.doc["outcome"] = {{"isomorphic", r.isomorphic()}, {"nodes", r.nodes_visited}};
      if (r.mapping) manifest.doc["outcome"]["mapping"] = *r.mapping;
      else code = kExitFailed;
      std::cout << manifest.doc["outcome"].dump() << "\n";
    } else if (reproduce_cmd->parsed()) {
      manifest.doc["command"] = "reproduce";
      manifest.doc["parameters"] = {{"quick", quick}, {"workers", workers}};
      reproduce::Options options{.quick = quick, .fixtures_dir = fixtures, .workers = workers};
      const auto results = reproduce::run_all(options, &std::cout);
      const auto passed = std::count_if(results.begin(), results.end(),
                                        [](const auto& r) { return r.passed; });
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      manifest.doc["outcome"] = {{"passed", passed}, {"total", results.size()}};
      if (passed != static_cast<std::ptrdiff_t>(results.size())) code = kExitFailed;
    }
  } catch (const Error& e) {
    print_error(std::string(to_string(e.code())), e.what());
    manifest.doc["outcome"] = {{"error", std::string(to_string(e.code()))}};
    code = exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    code = kExitFailed;
  }

  manifest.doc["exit_code"] = code;
  if (manifest_path.empty()) {
    std::cerr << json{{"manifest", manifest.doc}}.dump() << "\n";
  } else {
    std::ofstream out(manifest_path);
    out << manifest.doc.dump(2) << "\n";
  }
  return code;
}
