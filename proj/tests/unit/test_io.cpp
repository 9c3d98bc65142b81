#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "ncrainbow/error.hpp"
#include "ncrainbow/io.hpp"
#include "ncrainbow/ncgraph.hpp"

using namespace ncrainbow;

namespace {

ErrorCode parse_error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("group round trip") {
  const Group g = dicyclic(3);
  std::stringstream ss;
  io::write_group(ss, g);
  const Group back = io::read_group(ss);
  CHECK(back.table() == g.table());
  CHECK(std::vector<std::string>(back.names().begin(), back.names().end()) ==
        std::vector<std::string>(g.names().begin(), g.names().end()));
}

TEST_CASE("group parsing") {
  std::istringstream ok("cayley 2\n0 1\n1 0\n");
  CHECK(io::read_group(ok).order() == 2);
  std::istringstream bad_header("table 2\n0 1\n1 0\n");
  CHECK(parse_error_of([&] { io::read_group(bad_header); }) == ErrorCode::kParseError);
  std::istringstream short_row("cayley 2\n0 1\n1\n");
  CHECK(parse_error_of([&] { io::read_group(short_row); }) == ErrorCode::kParseError);
  std::istringstream not_group("cayley 2\n0 1\n1 1\n");
  CHECK(parse_error_of([&] { io::read_group(not_group); }) != ErrorCode::kInternal);
}

TEST_CASE("fixtures load") {
  const std::filesystem::path dir = NCRAINBOW_FIXTURES_DIR;
  CHECK(io::load_group(dir / "A4.cay").order() == 12);
  CHECK(io::load_group(dir / "S4.cay").order() == 24);
  CHECK(io::load_group(dir / "A5.cay").order() == 60);
  CHECK(io::load_group(dir / "SL2_3.cay").order() == 24);
  const Group s3 = io::load_group(dir / "S3_shuffled.cay");
  CHECK(s3.order() == 6);
  CHECK(center(s3).size() == 1);
  CHECK(center(io::load_group(dir / "SL2_3.cay")).size() == 2);
  CHECK(center(io::load_group(dir / "A5.cay")).size() == 1);
}

TEST_CASE("graph round trip") {
  const Graph g = noncommuting_graph(dihedral(5)).graph();
  std::stringstream ss;
  io::write_graph(ss, g);
  CHECK(io::read_graph(ss) == g);

  std::istringstream dup("graph 3 2\n0 1\n0 1\n");
  CHECK(parse_error_of([&] { io::read_graph(dup); }) == ErrorCode::kParseError);
  std::istringstream order("graph 3 1\n1 0\n");
  CHECK(parse_error_of([&] { io::read_graph(order); }) == ErrorCode::kParseError);
  std::istringstream count("graph 3 2\n0 1\n");
  CHECK(parse_error_of([&] { io::read_graph(count); }) == ErrorCode::kParseError);
}

TEST_CASE("coloring round trip") {
  const auto cg = prop24_coloring({2, 3, 2});
  std::stringstream ss;
  io::write_coloring(ss, cg.coloring);
  CHECK(io::read_coloring(ss, cg.graph) == cg.coloring);

  const Graph k3 = complete_graph(3);
  std::istringstream missing("coloring 2\n0 1 1\n0 2 2\n");
  CHECK(parse_error_of([&] { io::read_coloring(missing, k3); }) != ErrorCode::kInternal);
  std::istringstream range("coloring 2\n0 1 1\n0 2 3\n1 2 1\n");
  CHECK(parse_error_of([&] { io::read_coloring(range, k3); }) != ErrorCode::kInternal);
}

TEST_CASE("certificate json") {
  const auto cg = prop24_coloring({1, 4, 1});
  const auto cert = std::get<RainbowCertificate>(is_rainbow_k_connected(cg.graph, cg.coloring, 2));
  const auto j = io::to_json(cert);
  CHECK(j.at("k") == 2);
  CHECK(j.at("colors_used") == 2);
  CHECK(j.at("pairs").size() == 10);
  CHECK(j.at("pairs")[0].at("pair") == nlohmann::json::array({0, 1}));
  const auto back = io::certificate_from_json(j);
  CHECK(io::to_json(back) == j);
  CHECK(certificate_is_valid(cg.graph, cg.coloring, back));
}

TEST_CASE("bound report json") {
  const auto r = bound_report({"D6", dihedral(3)});
  const auto j = io::to_json(r);
  CHECK(j.at("id") == "D6");
  CHECK(j.at("order") == 6);
  CHECK(j.at("center_size") == 1);
  CHECK(j.at("p_num") == "19");
  CHECK(j.at("p_den") == "8");
  CHECK(j.at("flagged") == true);
  CHECK(io::to_string(Rational(19, 8)) == "19/8");
}
