#pragma once

// Automorphisms of CCC_n built from vertex labelings.  A labeling is fixed by
// the vertex that receives the base label (00...0, 1) and the direction in
// which its cycle is numbered; every automorphism arises this way.

#include <cstdint>
#include <vector>

#include "ccc/core.hpp"

namespace ccc {

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

enum class Orientation { Forward, Reverse };

// Vertex maps are materialized up to this dimension; above it images are
// computed on demand.
inline constexpr int kMaterializeLimit = 16;

class Automorphism {
 public:
  // Image of the base vertex and the orientation its cycle is mapped with.
  Vertex anchor() const { return anchor_; }
  Orientation orientation() const { return orientation_; }
  Dimension dimension() const { return n_; }
  bool materialized() const { return !image_.empty(); }

  // Throws InvalidVertex.
  Vertex apply(const Vertex& v) const;

  Automorphism inverse() const;
  // (this o first): apply `first`, then this.
  Automorphism after(const Automorphism& first) const;

  // Index-addressed map; empty unless materialized().
  const std::vector<VertexIndex>& image_table() const { return image_; }

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.n_ == b.n_ && a.translation_ == b.translation_ && a.position_map_ == b.position_map_;
  }

 private:
  friend Automorphism labeling_from(const Vertex&, Orientation, Dimension);
  friend Automorphism labeling_from_sweep(const Vertex&, Orientation, Dimension, bool);

  Automorphism(Dimension n, CubeWord translation, std::vector<int> position_map);

  Vertex apply_closed_form(const Vertex& v) const;
  void materialize_closed_form();

  Dimension n_;
  CubeWord translation_;
  // position_map_[p - 1] = digit position that label position p lands on.
  std::vector<int> position_map_;
  Vertex anchor_;
  Orientation orientation_;
  std::vector<VertexIndex> image_;
};

// The automorphism sending (00...0, 1) to `anchor`, with the base cycle's
// Increasing direction carried to `orientation` at the anchor.  The vertex
// map is built by sweeping outward from the anchor's cycle.
Automorphism labeling_from(const Vertex& anchor, Orientation orientation, Dimension n);

// Same construction with the cycle sweep visiting hypercube neighbors in
// descending digit order when `descending` is set.  Exposed so the result
// can be checked to be sweep-order independent.
Automorphism labeling_from_sweep(const Vertex& anchor, Orientation orientation, Dimension n,
                                 bool descending);

Automorphism identity_automorphism(Dimension n);

// phi(u) = v and phi(v) = u.  Throws NotAdjacent.
Automorphism swap_automorphism(const Vertex& u, const Vertex& v, Dimension n);

// n * 2^(n+1).
std::uint64_t automorphism_group_size(Dimension n);

// Q_n automorphism w -> permute(w) ^ translation.  digit_permutation[i-1]
// is the position digit i moves to.
class HypercubeAutomorphism {
 public:
  CubeWord apply(CubeWord w) const;
  CubeWord translation() const { return translation_; }
  const std::vector<int>& digit_permutation() const { return permutation_; }

  friend bool operator==(const HypercubeAutomorphism&, const HypercubeAutomorphism&) = default;

 private:
  friend HypercubeAutomorphism hypercube_automorphism_from(CubeWord, std::vector<int>, Dimension);
  HypercubeAutomorphism(int n, CubeWord translation, std::vector<int> permutation)
      : n_(n), translation_(translation), permutation_(std::move(permutation)) {}

  int n_;
  CubeWord translation_;
  std::vector<int> permutation_;
};

// Throws InvalidPermutation unless digit_permutation is a permutation of 1..n.
HypercubeAutomorphism hypercube_automorphism_from(CubeWord translation,
                                                  std::vector<int> digit_permutation,
                                                  Dimension n);

}  // namespace ccc
