#include <doctest.h>

#include <algorithm>

#include "ccc/balance.hpp"
#include "ccc/iwe.hpp"
#include "ccc/oracle.hpp"

using namespace ccc;

namespace {

std::uint64_t half(int n) { return (static_cast<std::uint64_t>(n) << n) / 2; }

bool contains(const std::vector<Vertex>& vs, const Vertex& x) {
  return std::find(vs.begin(), vs.end(), x) != vs.end();
}

}  // namespace

TEST_SUITE("balance") {

TEST_CASE("w_partition examples") {
  const Dimension n3(3);
  auto p = w_partition(parse_vertex("000:1", n3), parse_vertex("100:1", n3), n3);
  CHECK(p.sizes == PartitionSizes{12, 12, 0});
  CHECK(p.edge.kind == EdgeKind::CubeEdge);

  const Dimension n4(4);
  p = w_partition(parse_vertex("0000:1", n4), parse_vertex("0000:4", n4), n4);
  CHECK(p.sizes == PartitionSizes{32, 32, 0});

  p = w_partition(parse_vertex("000:1", n3), parse_vertex("000:3", n3), n3, true);
  CHECK(p.sizes.wuv == p.sizes.wvu);
  CHECK(p.sizes.equal >= 1);
  CHECK(contains(p.members->equal, parse_vertex("000:2", n3)));
  // Frozen from the BFS partition oracle.
  CHECK(p.sizes == PartitionSizes{8, 8, 8});

  CHECK_THROWS_AS(w_partition(parse_vertex("000:1", n3), parse_vertex("010:1", n3), n3),
                  NotAdjacent);
}

TEST_CASE("members partition the vertex set by their defining comparison") {
  for (int nn = 3; nn <= 6; ++nn) {
    const Dimension n(nn);
    for (const Edge& e : {representative_edges(n).cube, representative_edges(n).cycle}) {
      const WPartition p = w_partition(e.u, e.v, n, true);
      const auto& m = *p.members;
      CHECK(m.wuv.size() + m.wvu.size() + m.equal.size() == vertex_count(n));
      CHECK(p.sizes.wuv + p.sizes.wvu + p.sizes.equal == vertex_count(n));
      for (const auto& x : m.wuv) REQUIRE(distance(x, e.u, n) < distance(x, e.v, n));
      for (const auto& x : m.wvu) REQUIRE(distance(x, e.v, n) < distance(x, e.u, n));
      for (const auto& x : m.equal) REQUIRE(distance(x, e.u, n) == distance(x, e.v, n));
    }
  }
}

TEST_CASE("representative_edges") {
  const Dimension n3(3);
  const auto r3 = representative_edges(n3);
  CHECK(format_vertex(r3.cube.u, n3) == "000:1");
  CHECK(format_vertex(r3.cube.v, n3) == "100:1");
  CHECK(format_vertex(r3.cycle.v, n3) == "000:3");
  const Dimension n4(4);
  const auto r4 = representative_edges(n4);
  CHECK(format_vertex(r4.cube.v, n4) == "1000:1");
  CHECK(format_vertex(r4.cycle.v, n4) == "0000:4");
  const Dimension n7(7);
  const auto r7 = representative_edges(n7);
  CHECK(classify_edge(r7.cube.u, r7.cube.v, n7) == EdgeKind::CubeEdge);
  CHECK(classify_edge(r7.cycle.u, r7.cycle.v, n7) == EdgeKind::CycleEdge);
}

TEST_CASE("is_distance_balanced") {
  CHECK(is_distance_balanced(Dimension(3), AnalysisMode::Exhaustive));
  CHECK(is_distance_balanced(Dimension(8), AnalysisMode::Representative));
  CHECK(is_distance_balanced(Dimension(5), AnalysisMode::Exhaustive));
  CHECK_THROWS_AS(is_distance_balanced(Dimension(10), AnalysisMode::Exhaustive), DimensionError);
  CHECK_THROWS_AS(analyze(Dimension(kMaxAnalysisDimension + 1)), DimensionError);
}

TEST_CASE("ndb_constant") {
  CHECK(ndb_constant(Dimension(4)) == 32u);
  CHECK(ndb_constant(Dimension(6)) == 192u);
  CHECK_FALSE(ndb_constant(Dimension(3)).has_value());
  CHECK(ndb_constant(Dimension(4), AnalysisMode::Exhaustive) == 32u);
  CHECK_FALSE(ndb_constant(Dimension(5), AnalysisMode::Exhaustive).has_value());
}

TEST_CASE("equal set of the cycle edge") {
  CHECK(equal_set_empty_for_cycle_edge(Dimension(4)));
  CHECK(equal_set_empty_for_cycle_edge(Dimension(6)));
  CHECK_FALSE(equal_set_empty_for_cycle_edge(Dimension(7)));
  const Dimension n7(7);
  CHECK(cycle_edge_equidistant_witness(n7) == parse_vertex("0000000:4", n7));
  CHECK_FALSE(cycle_edge_equidistant_witness(Dimension(8)).has_value());
}

TEST_CASE("analyze verdicts") {
  const auto v4 = analyze(Dimension(4));
  CHECK(v4.distance_balanced);
  CHECK(v4.ndb_constant == 32u);
  CHECK_FALSE(v4.exhaustive_checked);

  const auto v3 = analyze(Dimension(3));
  CHECK(v3.distance_balanced);
  CHECK_FALSE(v3.ndb_constant.has_value());

  const auto v5 = analyze(Dimension(5));
  CHECK(v5.cube_edge.sizes == PartitionSizes{80, 80, 0});
  CHECK(v5.cycle_edge.sizes.wuv == v5.cycle_edge.sizes.wvu);
  CHECK(v5.cycle_edge.sizes.equal > 0);
  // Frozen from the BFS partition oracle.
  CHECK(v5.cycle_edge.sizes == PartitionSizes{64, 64, 32});

  const auto e6 = analyze(Dimension(6), AnalysisMode::Exhaustive);
  CHECK(e6.exhaustive_checked);
  CHECK(e6.edges_checked == 3 * 6 * 32);
  CHECK(e6.orbit_consistent == true);
  CHECK_FALSE(e6.first_unbalanced.has_value());
}

TEST_CASE("ndb constant implies empty equal sets on checked edges") {
  for (int nn = 3; nn <= 9; ++nn) {
    const auto v = analyze(Dimension(nn), AnalysisMode::Exhaustive);
    if (v.ndb_constant) {
      CHECK(v.distance_balanced);
      CHECK(v.cube_edge.sizes.equal == 0);
      CHECK(v.cycle_edge.sizes.equal == 0);
    }
  }
}

TEST_CASE("distance-balanced on every edge for n = 3..9") {
  for (int nn = 3; nn <= 9; ++nn) {
    const auto v = analyze(Dimension(nn), AnalysisMode::Exhaustive);
    CHECK_MESSAGE(v.distance_balanced, "n=" << nn);
    CHECK_MESSAGE(v.orbit_consistent == true, "n=" << nn);
  }
}

TEST_CASE("representative cube edge splits the graph in half for n = 3..12") {
  for (int nn = 3; nn <= 12; ++nn) {
    const auto v = analyze(Dimension(nn));
    CHECK(v.cube_edge.sizes == PartitionSizes{half(nn), half(nn), 0});
  }
}

TEST_CASE("cycle edge partitions by parity") {
  for (int nn : {4, 6, 8, 10}) {
    const auto v = analyze(Dimension(nn));
    CHECK(v.cycle_edge.sizes == PartitionSizes{half(nn), half(nn), 0});
  }
  for (int nn : {3, 5, 7, 9}) {
    const Dimension n(nn);
    const auto v = analyze(n);
    CHECK(v.cycle_edge.sizes.equal > 0);
    CHECK(v.cycle_edge.sizes.wuv == v.cycle_edge.sizes.wvu);
    CHECK(v.cycle_edge.sizes.wuv < half(nn));
    const auto witness = cycle_edge_equidistant_witness(n);
    REQUIRE(witness.has_value());
    const Edge e = representative_edges(n).cycle;
    CHECK(distance(*witness, e.u, n) == (nn - 1) / 2);
    CHECK(distance(*witness, e.v, n) == (nn - 1) / 2);
  }
}

TEST_CASE("cube-edge fast path agrees with generic classification") {
  for (int nn = 3; nn <= 8; ++nn) {
    const Dimension n(nn);
    bool ok = true;
    for_each_edge(n, [&](const Edge& e) {
      if (e.kind != EdgeKind::CubeEdge || !ok) return;
      const auto fast = w_partition(e.u, e.v, n, true, PartitionMethod::Auto);
      const auto generic = w_partition(e.u, e.v, n, true, PartitionMethod::Generic);
      ok = fast.sizes == generic.sizes && fast.members->wuv == generic.members->wuv &&
           fast.members->wvu == generic.members->wvu;
    });
    CHECK_MESSAGE(ok, "n=" << nn);
  }
}

TEST_CASE("partition sizes do not depend on the chosen edge of a kind") {
  for (int nn : {3, 4}) {
    const Dimension n(nn);
    const auto reps = representative_edges(n);
    const auto cube = w_partition(reps.cube.u, reps.cube.v, n).sizes;
    const auto cycle = w_partition(reps.cycle.u, reps.cycle.v, n).sizes;
    bool ok = true;
    for_each_edge(n, [&](const Edge& e) {
      const auto s = w_partition(e.u, e.v, n, false, PartitionMethod::Generic).sizes;
      ok = ok && s == (e.kind == EdgeKind::CubeEdge ? cube : cycle);
    });
    CHECK(ok);
  }
}

TEST_CASE("IWE partitions match the BFS oracle") {
  for (int nn = 3; nn <= 10; ++nn) {
    const Dimension n(nn);
    for (const Edge& e : {representative_edges(n).cube, representative_edges(n).cycle}) {
      CHECK(w_partition(e.u, e.v, n).sizes == bfs_w_partition(e.u, e.v, n).sizes);
    }
  }
}

}  // TEST_SUITE
