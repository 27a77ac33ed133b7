#include "ccc/oracle.hpp"

#include <array>
#include <limits>
#include <string>

namespace ccc {

namespace {

using Adjacency = std::vector<std::array<std::uint32_t, 3>>;

Adjacency build_adjacency(Dimension n) {
  const VertexIndex total = vertex_count(n);
  Adjacency adj(total);
  for (VertexIndex i = 0; i < total; ++i) {
    const auto nb = neighbors(vertex_at(i, n), n);
    for (int j = 0; j < 3; ++j) adj[i][j] = static_cast<std::uint32_t>(index_of(nb[j], n));
  }
  return adj;
}

bool adjacent(const Adjacency& adj, std::uint32_t a, std::uint32_t b) {
  return adj[a][0] == b || adj[a][1] == b || adj[a][2] == b;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(Dimension n) : adj_(build_adjacency(n)) {
    const auto total = static_cast<std::uint32_t>(adj_.size());
    // BFS order from vertex 0; every vertex after the root has an earlier
    // neighbor (its parent) whose image pins its candidates.
    std::vector<bool> seen(total, false);
    order_.push_back(0);
    parent_.assign(total, kNone);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      for (std::uint32_t w : adj_[order_[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          parent_[w] = order_[head];
          order_.push_back(w);
        }
      }
    }
    image_.assign(total, kNone);
    preimage_.assign(total, kNone);
  }

  std::uint64_t count() {
    count_ = 0;
    extend(0);
    return count_;
  }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  bool consistent(std::uint32_t v, std::uint32_t target) const {
    for (std::uint32_t w : adj_[v]) {
      if (image_[w] != kNone && !adjacent(adj_, target, image_[w])) return false;
    }
    for (std::uint32_t y : adj_[target]) {
      if (preimage_[y] != kNone && !adjacent(adj_, v, preimage_[y])) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order_.size()) {
      ++count_;
      return;
    }
    const std::uint32_t v = order_[depth];
    auto try_target = [&](std::uint32_t target) {
      if (preimage_[target] != kNone || !consistent(v, target)) return;
      image_[v] = target;
      preimage_[target] = v;
      extend(depth + 1);
      image_[v] = kNone;
      preimage_[target] = kNone;
    };
    if (parent_[v] == kNone) {
      for (std::uint32_t t = 0; t < adj_.size(); ++t) try_target(t);
    } else {
      for (std::uint32_t t : adj_[image_[parent_[v]]]) try_target(t);
    }
  }

  Adjacency adj_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> preimage_;
  std::uint64_t count_ = 0;
};

}  // namespace

DistanceField bfs_distances(const Vertex& source, Dimension n) {
  if (n.value() > kMaxBfsDimension) {
    throw DimensionError("BFS distance fields support n <= " + std::to_string(kMaxBfsDimension));
  }
  require_valid(source, n);
  constexpr std::uint16_t kUnseen = std::numeric_limits<std::uint16_t>::max();
  const VertexIndex total = vertex_count(n);
  DistanceField field{source, std::vector<std::uint16_t>(total, kUnseen)};
  std::vector<Vertex> frontier{source};
  field.dist[index_of(source, n)] = 0;
  std::uint16_t level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<Vertex> next;
    for (const auto& x : frontier) {
      for (const auto& y : neighbors_unchecked(x, n.value())) {
        auto& d = field.dist[index_of(y, n)];
        if (d == kUnseen) {
          d = level;
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  return field;
}

bool is_lipschitz_field(const DistanceField& field, Dimension n) {
  if (field.at(field.source, n) != 0) return false;
  const VertexIndex total = vertex_count(n);
  for (VertexIndex i = 0; i < total; ++i) {
    const Vertex x = vertex_at(i, n);
    const int dx = field.dist[i];
    for (const auto& y : neighbors_unchecked(x, n.value())) {
      const int dy = field.at(y, n);
      if (dx - dy > 1 || dy - dx > 1) return false;
    }
  }
  return true;
}

WPartition bfs_w_partition(const Vertex& u, const Vertex& v, Dimension n, bool with_members) {
  const EdgeKind kind = classify_edge(u, v, n);
  if (n.value() > kMaxBfsPartitionDimension) {
    throw DimensionError("BFS partitions support n <= " +
                         std::to_string(kMaxBfsPartitionDimension));
  }
  const DistanceField du = bfs_distances(u, n);
  const DistanceField dv = bfs_distances(v, n);
  WPartition p{Edge{u, v, kind}, {}, std::nullopt};
  if (with_members) p.members.emplace();
  const VertexIndex total = vertex_count(n);
  for (VertexIndex i = 0; i < total; ++i) {
    const Vertex x = vertex_at(i, n);
    if (du.dist[i] < dv.dist[i]) {
      ++p.sizes.wuv;
      if (p.members) p.members->wuv.push_back(x);
    } else if (dv.dist[i] < du.dist[i]) {
      ++p.sizes.wvu;
      if (p.members) p.members->wvu.push_back(x);
    } else {
      ++p.sizes.equal;
      if (p.members) p.members->equal.push_back(x);
    }
  }
  return p;
}

std::uint64_t count_automorphisms_bruteforce(Dimension n) {
  if (n.value() > kMaxAutomorphismSearchDimension) {
    throw DimensionError("brute-force automorphism search supports n <= " +
                         std::to_string(kMaxAutomorphismSearchDimension));
  }
  return AutomorphismSearch(n).count();
}

}  // namespace ccc
