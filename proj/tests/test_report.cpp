#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "report.hpp"

using namespace ccc;
using report::Format;

namespace {

std::size_t line_count(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("verdict json carries the ndb constant") {
  const auto j = report::verdict_json(analyze(Dimension(4)));
  CHECK(j["ndb_constant"] == 32);
  CHECK(j["distance_balanced"] == true);
  CHECK(j["cube_edge"]["wuv"] == 32);
  CHECK(j.begin().key() == "n");
  CHECK(report::verdict_json(analyze(Dimension(3)))["ndb_constant"].is_null());
}

TEST_CASE("identical inputs render identically") {
  const auto a = report::render_verdict(analyze(Dimension(5), AnalysisMode::Exhaustive), Format::Json);
  const auto b = report::render_verdict(analyze(Dimension(5), AnalysisMode::Exhaustive), Format::Json);
  CHECK(a == b);
  CHECK(report::render_verification(verify(4), Format::Json) ==
        report::render_verification(verify(4), Format::Json));
}

TEST_CASE("member csv has one row per member") {
  const Dimension n(5);
  const auto e = representative_edges(n).cycle;
  const auto p = w_partition(e.u, e.v, n, true);
  const auto csv = report::render_partition(p, n, Format::Csv);
  CHECK(csv.rfind("set,vertex\n", 0) == 0);
  CHECK(line_count(csv) == 1 + p.sizes.wuv + p.sizes.wvu + p.sizes.equal);
  const auto sizes_only = report::render_partition(w_partition(e.u, e.v, n), n, Format::Csv);
  CHECK(sizes_only == "wuv,wvu,equal\n64,64,32\n");
}

TEST_CASE("route renderings") {
  const Dimension n(3);
  const Vertex a = parse_vertex("000:1", n);
  const Vertex b = parse_vertex("010:2", n);
  const auto path = shortest_path(a, b, n);
  CHECK(report::render_route(path, a, b, n, Format::Table) == "000:1\n000:2\n010:2\nlength 2\n");
  const auto j = report::route_json(path, a, b, n);
  CHECK(j["length"] == 2);
  CHECK(j["path"].size() == 3);
  CHECK(line_count(report::render_route(path, a, b, n, Format::Csv)) == 4);
}

TEST_CASE("csv quoting") {
  CHECK(report::csv_field("plain") == "plain");
  CHECK(report::csv_field("a,b") == "\"a,b\"");
  CHECK(report::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("verification csv has a row per check") {
  const auto r = verify(4);
  const auto csv = report::render_verification(r, Format::Csv);
  CHECK(line_count(csv) == 1 + r.checks_run);
}

}  // TEST_SUITE
