#pragma once

// W-set partitions of the vertex set for an edge uv:
//   W_uv   = { x : d(x,u) < d(x,v) }
//   W_vu   = { x : d(x,v) < d(x,u) }
//   equal  = { x : d(x,u) = d(x,v) }
// and the distance-balanced / nicely-distance-balanced verdicts built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

// Largest n for representative-edge analysis (n * 2^n vertices per pass).
inline constexpr int kMaxAnalysisDimension = 20;
// Largest n for analysis over every edge.
inline constexpr int kMaxExhaustiveDimension = 9;

enum class AnalysisMode { Representative, Exhaustive };

// Auto uses the cube-edge shortcut (side of the flipped digit) where it
// applies; Generic always compares IWE distances.
enum class PartitionMethod { Auto, Generic };

struct PartitionSizes {
  std::uint64_t wuv = 0;
  std::uint64_t wvu = 0;
  std::uint64_t equal = 0;

  friend bool operator==(const PartitionSizes&, const PartitionSizes&) = default;
};

struct PartitionMembers {
  std::vector<Vertex> wuv;
  std::vector<Vertex> wvu;
  std::vector<Vertex> equal;
};

struct WPartition {
  Edge edge;
  PartitionSizes sizes;
  std::optional<PartitionMembers> members;
};

struct BalanceVerdict {
  int n = 0;
  AnalysisMode mode = AnalysisMode::Representative;
  bool distance_balanced = false;
  std::optional<std::uint64_t> ndb_constant;
  WPartition cube_edge;
  WPartition cycle_edge;
  bool exhaustive_checked = false;
  std::uint64_t edges_checked = 0;
  // Exhaustive mode: every cube edge shares one size triple and every cycle
  // edge another.
  std::optional<bool> orbit_consistent;
  // Exhaustive mode: first edge with |W_uv| != |W_vu|, if any.
  std::optional<Edge> first_unbalanced;
};

// Throws NotAdjacent if uv is not an edge, DimensionError above
// kMaxAnalysisDimension.
WPartition w_partition(const Vertex& u, const Vertex& v, Dimension n, bool with_members = false,
                       PartitionMethod method = PartitionMethod::Auto);

struct RepresentativeEdges {
  Edge cube;   // (00...0,1)-(10...0,1)
  Edge cycle;  // (00...0,1)-(00...0,n)
};

RepresentativeEdges representative_edges(Dimension n);

bool is_distance_balanced(Dimension n, AnalysisMode mode = AnalysisMode::Representative);

// Common |W_uv| = |W_vu| over the checked edges, if there is one.
std::optional<std::uint64_t> ndb_constant(Dimension n,
                                          AnalysisMode mode = AnalysisMode::Representative);

bool equal_set_empty_for_cycle_edge(Dimension n);

// (00...0, (n+1)/2) when n is odd and it is equidistant from both ends of
// the representative cycle edge; nullopt otherwise.
std::optional<Vertex> cycle_edge_equidistant_witness(Dimension n);

BalanceVerdict analyze(Dimension n, AnalysisMode mode = AnalysisMode::Representative,
                       bool with_members = false);

}  // namespace ccc
