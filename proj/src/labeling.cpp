#include "ccc/labeling.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace ccc {

namespace {

CubeWord permute_word(CubeWord w, const std::vector<int>& position_map) {
  CubeWord out = 0;
  for (CubeWord bits = w; bits != 0; bits &= bits - 1) {
    const int p = std::countr_zero(bits) + 1;
    out = flip_digit(out, position_map[p - 1]);
  }
  return out;
}

std::vector<int> invert_map(const std::vector<int>& position_map) {
  std::vector<int> inv(position_map.size());
  for (std::size_t p = 0; p < position_map.size(); ++p) {
    inv[position_map[p] - 1] = static_cast<int>(p) + 1;
  }
  return inv;
}

// Label position p lands on anchor digit stepped (p - 1) times in `orientation`.
std::vector<int> anchor_cycle_walk(const Vertex& anchor, Orientation orientation, int n) {
  std::vector<int> map(n);
  int pos = anchor.cycle_digit;
  for (int p = 1; p <= n; ++p) {
    map[p - 1] = pos;
    pos = orientation == Orientation::Forward ? cycle_succ(pos, n) : cycle_pred(pos, n);
  }
  return map;
}

}  // namespace

Automorphism::Automorphism(Dimension n, CubeWord translation, std::vector<int> position_map)
    : n_(n),
      translation_(translation),
      position_map_(std::move(position_map)),
      anchor_{translation_, position_map_[0]},
      orientation_(position_map_[1] == cycle_succ(position_map_[0], n.value())
                       ? Orientation::Forward
                       : Orientation::Reverse) {}

Vertex Automorphism::apply_closed_form(const Vertex& v) const {
  return Vertex{translation_ ^ permute_word(v.cube_word, position_map_),
                position_map_[v.cycle_digit - 1]};
}

void Automorphism::materialize_closed_form() {
  if (n_.value() > kMaterializeLimit) return;
  const VertexIndex total = vertex_count(n_);
  image_.resize(total);
  for (VertexIndex i = 0; i < total; ++i) {
    image_[i] = index_of(apply_closed_form(vertex_at(i, n_)), n_);
  }
}

Vertex Automorphism::apply(const Vertex& v) const {
  require_valid(v, n_);
  if (!image_.empty()) return vertex_at(image_[index_of(v, n_)], n_);
  return apply_closed_form(v);
}

Automorphism Automorphism::inverse() const {
  std::vector<int> inv = invert_map(position_map_);
  const CubeWord t = permute_word(translation_, inv);
  Automorphism out(n_, t, std::move(inv));
  out.materialize_closed_form();
  return out;
}

Automorphism Automorphism::after(const Automorphism& first) const {
  if (!(first.n_ == n_)) {
    throw DimensionError("cannot compose automorphisms of different dimensions");
  }
  std::vector<int> map(position_map_.size());
  for (std::size_t p = 0; p < map.size(); ++p) {
    map[p] = position_map_[first.position_map_[p] - 1];
  }
  const CubeWord t = translation_ ^ permute_word(first.translation_, position_map_);
  Automorphism out(n_, t, std::move(map));
  out.materialize_closed_form();
  return out;
}

Automorphism labeling_from_sweep(const Vertex& anchor, Orientation orientation, Dimension n,
                                 bool descending) {
  require_valid(anchor, n);
  const int nn = n.value();

  // Numbering the anchor's cycle fixes which actual digit each label digit
  // sits on; the cube edges leaving that cycle then label its n neighboring
  // cycles e_1..e_n.
  std::vector<int> label_to_actual = anchor_cycle_walk(anchor, orientation, nn);
  Automorphism out(n, anchor.cube_word, label_to_actual);
  if (nn > kMaterializeLimit) return out;

  const std::vector<int> actual_to_label = invert_map(label_to_actual);
  const std::size_t cycles = std::size_t{1} << nn;
  constexpr CubeWord kUnset = ~CubeWord{0};

  // Hypercube labeling of cycles, grown breadth-first from the anchor cycle:
  // crossing actual digit q flips label digit actual_to_label[q].
  std::vector<CubeWord> cycle_label(cycles, kUnset);
  cycle_label[anchor.cube_word] = 0;
  std::deque<CubeWord> queue{anchor.cube_word};
  while (!queue.empty()) {
    const CubeWord w = queue.front();
    queue.pop_front();
    for (int step = 0; step < nn; ++step) {
      const int q = descending ? nn - step : step + 1;
      const CubeWord next = flip_digit(w, q);
      if (cycle_label[next] != kUnset) continue;
      cycle_label[next] = flip_digit(cycle_label[w], actual_to_label[q - 1]);
      queue.push_back(next);
    }
  }

  // A vertex's cycle digit label is the label digit its cube edge changes.
  out.image_.assign(cycles * nn, 0);
  for (CubeWord w = 0; w < cycles; ++w) {
    for (int q = 1; q <= nn; ++q) {
      const CubeWord changed = cycle_label[w] ^ cycle_label[flip_digit(w, q)];
      const int label_digit = std::countr_zero(changed) + 1;
      out.image_[index_of(Vertex{cycle_label[w], label_digit}, n)] = index_of(Vertex{w, q}, n);
    }
  }
  return out;
}

Automorphism labeling_from(const Vertex& anchor, Orientation orientation, Dimension n) {
  return labeling_from_sweep(anchor, orientation, n, false);
}

Automorphism identity_automorphism(Dimension n) {
  return labeling_from(base_vertex(), Orientation::Forward, n);
}

Automorphism swap_automorphism(const Vertex& u, const Vertex& v, Dimension n) {
  const EdgeKind kind = classify_edge(u, v, n);
  if (kind == EdgeKind::CubeEdge) {
    const Automorphism to_u = labeling_from(u, Orientation::Forward, n);
    const Automorphism to_v = labeling_from(v, Orientation::Forward, n);
    return to_v.after(to_u.inverse());
  }
  // Label u as (0,1) and v as (0,n), then the reverse.
  const bool v_is_pred = v.cycle_digit == cycle_pred(u.cycle_digit, n.value());
  const Automorphism first =
      labeling_from(u, v_is_pred ? Orientation::Forward : Orientation::Reverse, n);
  const Automorphism second =
      labeling_from(v, v_is_pred ? Orientation::Reverse : Orientation::Forward, n);
  return second.after(first.inverse());
}

std::uint64_t automorphism_group_size(Dimension n) {
  return static_cast<std::uint64_t>(n.value()) << (n.value() + 1);
}

CubeWord HypercubeAutomorphism::apply(CubeWord w) const {
  return permute_word(w, permutation_) ^ translation_;
}

HypercubeAutomorphism hypercube_automorphism_from(CubeWord translation,
                                                  std::vector<int> digit_permutation,
                                                  Dimension n) {
  const int nn = n.value();
  if ((translation & ~n.word_mask()) != 0) {
    throw InvalidVertex("translation has bits above position n");
  }
  if (digit_permutation.size() != static_cast<std::size_t>(nn)) {
    throw InvalidPermutation("digit permutation must have " + std::to_string(nn) + " entries");
  }
  std::vector<bool> seen(nn + 1, false);
  for (int p : digit_permutation) {
    if (p < 1 || p > nn || seen[p]) {
      throw InvalidPermutation("digit permutation is not a permutation of 1.." +
                               std::to_string(nn));
    }
    seen[p] = true;
  }
  return HypercubeAutomorphism(nn, translation, std::move(digit_permutation));
}

}  // namespace ccc
