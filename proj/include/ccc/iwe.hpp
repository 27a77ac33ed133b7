#pragma once

// Interval-with-ends (IWE) diagrams: symbolic shortest-path templates on the
// loop of cycle digits 1..n, and the distance / routing machinery built on
// them.  Every diagram starts at the base vertex (00...0, 1); arbitrary pairs
// are first moved there by canonicalize().

#include <cstdint>
#include <optional>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

enum class Direction { Increasing, Decreasing };

// Monotone walk along the loop.  Increasing steps the cycle digit +1
// (..., n, 1, 2, ...).  Edge count is always in 0..n-1.
struct LoopArc {
  int from = 1;
  int to = 1;
  Direction direction = Direction::Increasing;

  int edge_count(int n) const;
  // Positions visited, from `from` to `to` inclusive.
  std::vector<int> positions(int n) const;
  bool covers(int position, int n) const;

  friend bool operator==(const LoopArc&, const LoopArc&) = default;
};

class CircledSet {
 public:
  CircledSet() = default;
  explicit CircledSet(CubeWord mask) : mask_(mask) {}

  bool contains(int position) const { return cube_digit(mask_, position); }
  int size() const;
  bool empty() const { return mask_ == 0; }
  CubeWord mask() const { return mask_; }
  std::vector<int> positions() const;  // ascending

  friend bool operator==(const CircledSet&, const CircledSet&) = default;

 private:
  CubeWord mask_ = 0;
};

struct IweDiagram {
  int n = kMinDimension;
  CircledSet circled;
  // Traversal arc from the entry endpoint to the exit endpoint.  Absent iff
  // nothing is circled; for one circled digit it is the single point.
  std::optional<LoopArc> interval;
  LoopArc initial_end;
  // With an empty circled set the diagram is the single end 1 -> k carried
  // by initial_end; terminal_end is then the zero-length arc k -> k.
  LoopArc terminal_end;
  int target_cycle_digit = 1;

  friend bool operator==(const IweDiagram&, const IweDiagram&) = default;
};

struct PathTrace {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

CircledSet circled_set(const Vertex& x, Dimension n);

// 8m candidates for m >= 2 circled digits, 4 for m = 1, 2 for m = 0, in
// tie-break order: deleted gap (ascending by its lower circled digit), entry
// endpoint (lower position first), initial direction, terminal direction
// (Increasing before Decreasing).
std::vector<IweDiagram> enumerate_diagrams(const Vertex& x, Dimension n);

bool is_well_formed(const IweDiagram& d);

// initial edges + terminal edges + interval edges + circled digits.
// Throws InvalidDiagram for a malformed diagram.
int diagram_length(const IweDiagram& d);

// First diagram of minimal length in enumeration order.
IweDiagram minimal_diagram(const Vertex& x, Dimension n);

int distance_from_base(const Vertex& x, Dimension n);

// Automorphism moving `anchor` to the base vertex: rotate digit positions so
// anchor's cycle digit becomes 1, then XOR away anchor's rotated cube word.
class Canonicalizer {
 public:
  Canonicalizer(const Vertex& anchor, Dimension n);

  Vertex to_base_frame(const Vertex& v) const;
  Vertex from_base_frame(const Vertex& v) const;

 private:
  int n_;
  int shift_;  // anchor.cycle_digit - 1
  CubeWord mask_;
  CubeWord offset_;  // rotated anchor cube word
};

Vertex canonicalize(const Vertex& a, const Vertex& b, Dimension n);
int distance(const Vertex& a, const Vertex& b, Dimension n);
PathTrace shortest_path(const Vertex& a, const Vertex& b, Dimension n);

}  // namespace ccc
