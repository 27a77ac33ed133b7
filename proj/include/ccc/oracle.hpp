#pragma once

// Brute-force ground truth.  Everything here walks the graph through
// core::neighbors only, never through IWE diagrams or the balance fast
// paths, so agreement with those modules means something.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccc/balance.hpp"
#include "ccc/core.hpp"

namespace ccc {

inline constexpr int kMaxBfsDimension = 22;
inline constexpr int kMaxBfsPartitionDimension = 16;
inline constexpr int kMaxAutomorphismSearchDimension = 4;
inline constexpr int kMaxVerifyDimension = 9;

struct DistanceField {
  Vertex source;
  std::vector<std::uint16_t> dist;  // by vertex index

  std::uint16_t at(const Vertex& v, Dimension n) const { return dist[index_of(v, n)]; }
};

// Throws DimensionError above kMaxBfsDimension.
DistanceField bfs_distances(const Vertex& source, Dimension n);

// |dist[x] - dist[y]| <= 1 on every edge and dist[source] == 0.
bool is_lipschitz_field(const DistanceField& field, Dimension n);

// Throws NotAdjacent, or DimensionError above kMaxBfsPartitionDimension.
WPartition bfs_w_partition(const Vertex& u, const Vertex& v, Dimension n,
                           bool with_members = false);

// Adjacency-preserving bijections, by backtracking over a BFS vertex order.
// Throws DimensionError above kMaxAutomorphismSearchDimension.
std::uint64_t count_automorphisms_bruteforce(Dimension n);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct DimensionReport {
  int n = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  bool distance_balanced = false;
  std::optional<std::uint64_t> ndb_constant;
  PartitionSizes cube_edge;
  PartitionSizes cycle_edge;
  std::vector<CheckResult> checks;
};

struct VerificationReport {
  int n_max = 0;
  bool all_passed = true;
  std::uint64_t checks_run = 0;
  std::vector<DimensionReport> dimensions;
};

// Cross-checks IWE distances, W-partitions, labelings and automorphism counts
// against the oracles for every n in 3..n_max.  Throws DimensionError above
// kMaxVerifyDimension.  Check failures are report content, not exceptions.
VerificationReport verify(int n_max);

}  // namespace ccc
