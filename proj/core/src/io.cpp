#include "ncrainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ncrainbow/error.hpp"

namespace ncrainbow::io {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split on whitespace; empty at end of input.
  std::vector<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return tokens;
    }
    return {};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no_) + ": " + what);
  }

  std::size_t number(const std::string& token) const {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) fail("expected a non-negative integer, got '" + token + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

template <typename T, typename Reader>
T load_with(const std::filesystem::path& path, Reader&& reader) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return reader(in);
}

template <typename T>
void save_with(const std::filesystem::path& path, const T& value,
               void (*writer)(std::ostream&, const T&)) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  writer(out, value);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

}  // namespace

void write_group(std::ostream& out, const Group& g) {
  out << "cayley " << g.order() << "\nnames";
  for (const auto& name : g.names()) out << ' ' << name;
  out << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.multiply(a, b);
    out << '\n';
  }
}

Group read_group(std::istream& in) {
  LineReader r(in);
  auto header = r.next();
  if (header.size() != 2 || header[0] != "cayley") r.fail("expected 'cayley <n>'");
  const std::size_t n = r.number(header[1]);
  if (n == 0) r.fail("order must be positive");
  std::vector<std::string> names;
  Group::Table table;
  for (auto tokens = r.next(); !tokens.empty(); tokens = r.next()) {
    if (tokens[0] == "names") {
      if (!names.empty() || !table.empty()) r.fail("'names' must directly follow the header");
      if (tokens.size() != n + 1) r.fail("expected " + std::to_string(n) + " names");
      names.assign(tokens.begin() + 1, tokens.end());
      continue;
    }
    if (tokens.size() != n) r.fail("row needs " + std::to_string(n) + " entries");
    if (table.size() == n) r.fail("more than " + std::to_string(n) + " rows");
    std::vector<Element> row;
    for (const auto& t : tokens) row.push_back(static_cast<Element>(r.number(t)));
    table.push_back(std::move(row));
  }
  if (table.size() != n) r.fail("expected " + std::to_string(n) + " rows");
  return Group::from_cayley_table(table, std::move(names));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << "\nlabels";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  LineReader r(in);
  auto header = r.next();
  if (header.size() != 3 || header[0] != "graph") r.fail("expected 'graph <n> <m>'");
  const std::size_t n = r.number(header[1]);
  const std::size_t m = r.number(header[2]);
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  bool first = true;
  for (auto tokens = r.next(); !tokens.empty(); tokens = r.next(), first = false) {
    if (tokens[0] == "labels") {
      if (!first) r.fail("'labels' must directly follow the header");
      if (tokens.size() != n + 1) r.fail("expected " + std::to_string(n) + " labels");
      labels.assign(tokens.begin() + 1, tokens.end());
      continue;
    }
    if (tokens.size() != 2) r.fail("expected 'u v'");
    const std::size_t u = r.number(tokens[0]), v = r.number(tokens[1]);
    if (u >= v || v >= n) r.fail("edge endpoints must satisfy u < v < n");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m)
    r.fail("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  GraphBuilder b = labels.empty() ? GraphBuilder(n) : GraphBuilder(std::move(labels));
  try {
    for (const Edge& e : edges) b.add_edge(e.u, e.v, /*strict=*/true);
    return std::move(b).build();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << "coloring " << c.color_count() << '\n';
  for (const auto& ce : c.edges()) out << ce.edge.u << ' ' << ce.edge.v << ' ' << ce.color << '\n';
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
  LineReader r(in);
  auto header = r.next();
  if (header.size() != 2 || header[0] != "coloring") r.fail("expected 'coloring <c>'");
  const std::size_t colors = r.number(header[1]);
  if (colors == 0 || colors > 0xFFFF) r.fail("color count out of range");
  std::vector<ColoredEdge> edges;
  for (auto tokens = r.next(); !tokens.empty(); tokens = r.next()) {
    if (tokens.size() != 3) r.fail("expected 'u v c'");
    const std::size_t u = r.number(tokens[0]), v = r.number(tokens[1]), c = r.number(tokens[2]);
    if (u >= v) r.fail("edge endpoints must satisfy u < v");
    if (c > 0xFFFF) r.fail("color out of range");
    edges.push_back({Edge(static_cast<Vertex>(u), static_cast<Vertex>(v)), static_cast<Color>(c)});
  }
  try {
    return EdgeColoring::from_edges(g, static_cast<Color>(colors), edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Group load_group(const std::filesystem::path& path) {
  return load_with<Group>(path, [](std::istream& in) { return read_group(in); });
}
Graph load_graph(const std::filesystem::path& path) {
  return load_with<Graph>(path, [](std::istream& in) { return read_graph(in); });
}
EdgeColoring load_coloring(const std::filesystem::path& path, const Graph& g) {
  return load_with<EdgeColoring>(path, [&g](std::istream& in) { return read_coloring(in, g); });
}
void save(const std::filesystem::path& path, const Group& g) { save_with(path, g, &write_group); }
void save(const std::filesystem::path& path, const Graph& g) { save_with(path, g, &write_graph); }
void save(const std::filesystem::path& path, const EdgeColoring& c) {
  save_with(path, c, &write_coloring);
}

nlohmann::json to_json(const RainbowCertificate& cert) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pp : cert.pairs)
    pairs.push_back({{"pair", {pp.x, pp.y}}, {"paths", pp.paths}});
  return {{"k", cert.k}, {"colors_used", cert.colors_used}, {"pairs", std::move(pairs)}};
}

RainbowCertificate certificate_from_json(const nlohmann::json& j) {
  RainbowCertificate cert;
  try {
    cert.k = j.at("k").get<std::size_t>();
    cert.colors_used = j.at("colors_used").get<std::size_t>();
    for (const auto& p : j.at("pairs")) {
      const auto ends = p.at("pair").get<std::vector<Vertex>>();
      if (ends.size() != 2) throw Error(ErrorCode::kParseError, "pair needs two vertices");
      cert.pairs.push_back({ends[0], ends[1], p.at("paths").get<std::vector<Path>>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return cert;
}

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

nlohmann::json to_json(const BoundReport& report) {
  return {{"id", report.id},
          {"order", report.order},
          {"center_size", report.center_size},
          {"p_num", boost::multiprecision::numerator(report.value).str()},
          {"p_den", boost::multiprecision::denominator(report.value).str()},
          {"flagged", report.flagged}};
}

}  // namespace ncrainbow::io
