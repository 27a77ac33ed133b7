#pragma once

// Cube-connected cycles CCC_n as an implicit graph.
//
// A vertex is a cube word x_1..x_n (bit i-1 holds x_i) plus a cycle digit k
// in 1..n.  Cycle edges join (x,k) to (x,k+-1) cyclically; cube edges join
// (x,k) to (x ^ e_k, k).  Dense vertex index = cube_word * n + (k - 1).

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n outside 3..30, or a resource gate (exhaustive mode, oracle memory) hit.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class NotAdjacent : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMinDimension = 3;
inline constexpr int kMaxDimension = 30;

class Dimension {
 public:
  // Throws DimensionError unless 3 <= n <= 30.
  explicit Dimension(int n);

  int value() const { return n_; }
  std::uint32_t word_mask() const { return (1u << n_) - 1u; }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

using CubeWord = std::uint32_t;
using VertexIndex = std::uint64_t;

struct Vertex {
  CubeWord cube_word = 0;
  int cycle_digit = 1;  // 1-based

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class EdgeKind { CycleEdge, CubeEdge };

struct Edge {
  Vertex u;
  Vertex v;
  EdgeKind kind;

  friend bool operator==(const Edge&, const Edge&) = default;
};

std::string_view to_string(EdgeKind kind);

// x_i for i in 1..n.
inline bool cube_digit(CubeWord w, int i) { return ((w >> (i - 1)) & 1u) != 0; }
inline CubeWord flip_digit(CubeWord w, int i) { return w ^ (1u << (i - 1)); }

// k +- 1 in the cyclic order 1..n.
inline int cycle_pred(int k, int n) { return k == 1 ? n : k - 1; }
inline int cycle_succ(int k, int n) { return k == n ? 1 : k + 1; }

bool is_valid(const Vertex& v, Dimension n);
void require_valid(const Vertex& v, Dimension n);

// The base vertex (00...0, 1).
inline Vertex base_vertex() { return Vertex{0, 1}; }

std::uint64_t vertex_count(Dimension n);
std::uint64_t edge_count(Dimension n);

inline VertexIndex index_of(const Vertex& v, Dimension n) {
  return static_cast<VertexIndex>(v.cube_word) * static_cast<VertexIndex>(n.value()) +
         static_cast<VertexIndex>(v.cycle_digit - 1);
}

inline Vertex vertex_at(VertexIndex idx, Dimension n) {
  const auto nn = static_cast<VertexIndex>(n.value());
  return Vertex{static_cast<CubeWord>(idx / nn), static_cast<int>(idx % nn) + 1};
}

// Fixed order: cycle predecessor, cycle successor, cube neighbor.
std::array<Vertex, 3> neighbors(const Vertex& v, Dimension n);

// Unchecked variant used on hot paths; v must already be valid.
inline std::array<Vertex, 3> neighbors_unchecked(const Vertex& v, int n) {
  return {Vertex{v.cube_word, cycle_pred(v.cycle_digit, n)},
          Vertex{v.cube_word, cycle_succ(v.cycle_digit, n)},
          Vertex{flip_digit(v.cube_word, v.cycle_digit), v.cycle_digit}};
}

// Throws NotAdjacent when u == v or the pair is not an edge.
EdgeKind classify_edge(const Vertex& u, const Vertex& v, Dimension n);
bool are_adjacent(const Vertex& u, const Vertex& v, Dimension n);

// Each undirected edge exactly once.  Vertices are visited in index order;
// each vertex emits its cycle-successor edge, then its cube edge when its
// own digit x_k is 0.
class EdgeStream {
 public:
  explicit EdgeStream(Dimension n);

  std::optional<Edge> next();

 private:
  Dimension n_;
  VertexIndex index_ = 0;
  int stage_ = 0;
};

void for_each_edge(Dimension n, const std::function<void(const Edge&)>& fn);
std::vector<Edge> edges(Dimension n);

// The n single-bit flips of w, in digit order 1..n.
std::vector<CubeWord> hypercube_neighbors(CubeWord w, Dimension n);

// "<x_1..x_n>:<k>", bit 1 leftmost.
std::string format_vertex(const Vertex& v, Dimension n);
Vertex parse_vertex(std::string_view text, Dimension n);

}  // namespace ccc
