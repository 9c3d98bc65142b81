#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "ncrainbow/bounds.hpp"
#include "ncrainbow/coloring.hpp"
#include "ncrainbow/graph.hpp"
#include "ncrainbow/group.hpp"
#include "ncrainbow/rainbow.hpp"

namespace ncrainbow::io {

// Cayley table:
//   cayley <n>
//   [names <n tokens>]
//   n lines of n 0-based indices
void write_group(std::ostream& out, const Group& g);
Group read_group(std::istream& in);

// Graph:
//   graph <n_vertices> <n_edges>
//   [labels <n tokens>]
//   one "u v" line per edge, 0-based, u < v
void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

// Coloring (relative to a companion graph):
//   coloring <n_colors>
//   one "u v c" line per edge, 0-based vertices, u < v, colors from 1
void write_coloring(std::ostream& out, const EdgeColoring& c);
EdgeColoring read_coloring(std::istream& in, const Graph& g);

Group load_group(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);
EdgeColoring load_coloring(const std::filesystem::path& path, const Graph& g);
void save(const std::filesystem::path& path, const Group& g);
void save(const std::filesystem::path& path, const Graph& g);
void save(const std::filesystem::path& path, const EdgeColoring& c);

// {"k", "colors_used", "pairs": [{"pair": [x, y], "paths": [[...], ...]}]}
nlohmann::json to_json(const RainbowCertificate& cert);
RainbowCertificate certificate_from_json(const nlohmann::json& j);

// {"id", "order", "center_size", "p_num", "p_den", "flagged"}; p_num and
// p_den are decimal strings.
nlohmann::json to_json(const BoundReport& report);

std::string to_string(const Rational& r);

}  // namespace ncrainbow::io
