#include "ccc/balance.hpp"

#include <string>

#include "ccc/iwe.hpp"

namespace ccc {

namespace {

void require_analysis_gate(Dimension n, AnalysisMode mode) {
  if (mode == AnalysisMode::Exhaustive && n.value() > kMaxExhaustiveDimension) {
    throw DimensionError("exhaustive analysis supports n <= " +
                         std::to_string(kMaxExhaustiveDimension));
  }
  if (n.value() > kMaxAnalysisDimension) {
    throw DimensionError("analysis supports n <= " + std::to_string(kMaxAnalysisDimension));
  }
}

enum class Side { U, V, Equal };

void record(WPartition& p, Side side, const Vertex& x) {
  switch (side) {
    case Side::U:
      ++p.sizes.wuv;
      if (p.members) p.members->wuv.push_back(x);
      break;
    case Side::V:
      ++p.sizes.wvu;
      if (p.members) p.members->wvu.push_back(x);
      break;
    case Side::Equal:
      ++p.sizes.equal;
      if (p.members) p.members->equal.push_back(x);
      break;
  }
}

Side compare(int du, int dv) {
  if (du < dv) return Side::U;
  if (dv < du) return Side::V;
  return Side::Equal;
}

// Distances from the base vertex for every vertex, by IWE minimization.
std::vector<std::uint8_t> base_distance_table(Dimension n) {
  const VertexIndex total = vertex_count(n);
  std::vector<std::uint8_t> table(total);
  for (VertexIndex i = 0; i < total; ++i) {
    table[i] = static_cast<std::uint8_t>(distance_from_base(vertex_at(i, n), n));
  }
  return table;
}

PartitionSizes sizes_from_table(const Edge& e, Dimension n,
                                const std::vector<std::uint8_t>& table) {
  const Canonicalizer from_u(e.u, n);
  const Canonicalizer from_v(e.v, n);
  PartitionSizes s;
  const VertexIndex total = vertex_count(n);
  for (VertexIndex i = 0; i < total; ++i) {
    const Vertex x = vertex_at(i, n);
    const int du = table[index_of(from_u.to_base_frame(x), n)];
    const int dv = table[index_of(from_v.to_base_frame(x), n)];
    switch (compare(du, dv)) {
      case Side::U: ++s.wuv; break;
      case Side::V: ++s.wvu; break;
      case Side::Equal: ++s.equal; break;
    }
  }
  return s;
}

}  // namespace

WPartition w_partition(const Vertex& u, const Vertex& v, Dimension n, bool with_members,
                       PartitionMethod method) {
  const EdgeKind kind = classify_edge(u, v, n);
  require_analysis_gate(n, AnalysisMode::Representative);

  WPartition p{Edge{u, v, kind}, {}, std::nullopt};
  if (with_members) p.members.emplace();
  const VertexIndex total = vertex_count(n);

  if (kind == EdgeKind::CubeEdge && method == PartitionMethod::Auto) {
    // x is strictly closer to whichever endpoint agrees with it on digit k.
    const int k = u.cycle_digit;
    for (VertexIndex i = 0; i < total; ++i) {
      const Vertex x = vertex_at(i, n);
      record(p, cube_digit(x.cube_word ^ u.cube_word, k) ? Side::V : Side::U, x);
    }
    return p;
  }

  const Canonicalizer from_u(u, n);
  const Canonicalizer from_v(v, n);
  for (VertexIndex i = 0; i < total; ++i) {
    const Vertex x = vertex_at(i, n);
    record(p,
           compare(distance_from_base(from_u.to_base_frame(x), n),
                   distance_from_base(from_v.to_base_frame(x), n)),
           x);
  }
  return p;
}

RepresentativeEdges representative_edges(Dimension n) {
  const Vertex base = base_vertex();
  return {Edge{base, Vertex{1u, 1}, EdgeKind::CubeEdge},
          Edge{base, Vertex{0u, n.value()}, EdgeKind::CycleEdge}};
}

bool is_distance_balanced(Dimension n, AnalysisMode mode) {
  return analyze(n, mode).distance_balanced;
}

std::optional<std::uint64_t> ndb_constant(Dimension n, AnalysisMode mode) {
  return analyze(n, mode).ndb_constant;
}

bool equal_set_empty_for_cycle_edge(Dimension n) {
  const Edge e = representative_edges(n).cycle;
  return w_partition(e.u, e.v, n).sizes.equal == 0;
}

std::optional<Vertex> cycle_edge_equidistant_witness(Dimension n) {
  if (n.value() % 2 == 0) return std::nullopt;
  const Edge e = representative_edges(n).cycle;
  const Vertex x{0u, (n.value() + 1) / 2};
  if (distance(x, e.u, n) != distance(x, e.v, n)) return std::nullopt;
  return x;
}

BalanceVerdict analyze(Dimension n, AnalysisMode mode, bool with_members) {
  require_analysis_gate(n, mode);
  const RepresentativeEdges reps = representative_edges(n);

  BalanceVerdict verdict;
  verdict.n = n.value();
  verdict.mode = mode;
  verdict.cube_edge = w_partition(reps.cube.u, reps.cube.v, n, with_members);
  verdict.cycle_edge = w_partition(reps.cycle.u, reps.cycle.v, n, with_members);

  std::vector<PartitionSizes> checked{verdict.cube_edge.sizes, verdict.cycle_edge.sizes};
  verdict.edges_checked = 2;

  if (mode == AnalysisMode::Exhaustive) {
    const auto table = base_distance_table(n);
    std::optional<PartitionSizes> cube_sizes;
    std::optional<PartitionSizes> cycle_sizes;
    bool consistent = true;
    checked.clear();
    verdict.edges_checked = 0;
    for_each_edge(n, [&](const Edge& e) {
      const PartitionSizes s = sizes_from_table(e, n, table);
      auto& orbit = e.kind == EdgeKind::CubeEdge ? cube_sizes : cycle_sizes;
      if (!orbit) orbit = s;
      consistent = consistent && *orbit == s;
      if (s.wuv != s.wvu && !verdict.first_unbalanced) verdict.first_unbalanced = e;
      if (checked.empty() || !(checked.back() == s)) checked.push_back(s);
      ++verdict.edges_checked;
    });
    verdict.exhaustive_checked = true;
    verdict.orbit_consistent = consistent;
  }

  verdict.distance_balanced = true;
  std::optional<std::uint64_t> common = checked.front().wuv;
  for (const auto& s : checked) {
    if (s.wuv != s.wvu) verdict.distance_balanced = false;
    if (common && (s.wuv != *common || s.wvu != *common)) common.reset();
  }
  if (verdict.distance_balanced) verdict.ndb_constant = common;
  return verdict;
}

}  // namespace ccc
