#include "ccc/iwe.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

namespace ccc {

namespace {

constexpr std::array<Direction, 2> kDirections{Direction::Increasing, Direction::Decreasing};

int arc_edges(int from, int to, Direction dir, int n) {
  const int diff = dir == Direction::Increasing ? to - from : from - to;
  return ((diff % n) + n) % n;
}

int step(int position, Direction dir, int n) {
  return dir == Direction::Increasing ? cycle_succ(position, n) : cycle_pred(position, n);
}

CubeWord rotate_down(CubeWord w, int shift, int n, CubeWord mask) {
  if (shift == 0) return w;
  return ((w >> shift) | (w << (n - shift))) & mask;
}

CubeWord rotate_up(CubeWord w, int shift, int n, CubeWord mask) {
  if (shift == 0) return w;
  return ((w << shift) | (w >> (n - shift))) & mask;
}

// Visits every candidate diagram for target (circled, k) in tie-break order.
// Returning false from `fn` stops the walk.
template <typename Fn>
void visit_diagrams(CircledSet circled, int k, int n, Fn&& fn) {
  IweDiagram d;
  d.n = n;
  d.circled = circled;
  d.target_cycle_digit = k;

  if (circled.empty()) {
    d.interval.reset();
    d.terminal_end = LoopArc{k, k, Direction::Increasing};
    for (auto dir : kDirections) {
      d.initial_end = LoopArc{1, k, dir};
      if (!fn(d)) return;
    }
    return;
  }

  std::array<int, kMaxDimension> s{};
  int m = 0;
  for (CubeWord bits = circled.mask(); bits != 0; bits &= bits - 1) {
    s[m++] = std::countr_zero(bits) + 1;
  }

  auto emit_ends = [&](int entry, int exit) {
    for (auto init_dir : kDirections) {
      d.initial_end = LoopArc{1, entry, init_dir};
      for (auto term_dir : kDirections) {
        d.terminal_end = LoopArc{exit, k, term_dir};
        if (!fn(d)) return false;
      }
    }
    return true;
  };

  if (m == 1) {
    d.interval = LoopArc{s[0], s[0], Direction::Increasing};
    emit_ends(s[0], s[0]);
    return;
  }

  // Deleting the gap after s[g] leaves the interval running Increasing from
  // s[g+1] around to s[g].
  for (int g = 0; g < m; ++g) {
    const int start = s[(g + 1) % m];
    const int end = s[g];
    const LoopArc forward{start, end, Direction::Increasing};
    const LoopArc backward{end, start, Direction::Decreasing};
    const LoopArc& first = start < end ? forward : backward;
    const LoopArc& second = start < end ? backward : forward;
    for (const LoopArc* arc : {&first, &second}) {
      d.interval = *arc;
      if (!emit_ends(arc->from, arc->to)) return;
    }
  }
}

int length_unchecked(const IweDiagram& d) {
  const int n = d.n;
  int total = d.initial_end.edge_count(n) + d.terminal_end.edge_count(n) + d.circled.size();
  if (d.interval) total += d.interval->edge_count(n);
  return total;
}

}  // namespace

int LoopArc::edge_count(int n) const { return arc_edges(from, to, direction, n); }

std::vector<int> LoopArc::positions(int n) const {
  std::vector<int> out;
  int p = from;
  out.push_back(p);
  for (int e = edge_count(n); e > 0; --e) {
    p = step(p, direction, n);
    out.push_back(p);
  }
  return out;
}

bool LoopArc::covers(int position, int n) const {
  return arc_edges(from, position, direction, n) <= edge_count(n);
}

int CircledSet::size() const { return std::popcount(mask_); }

std::vector<int> CircledSet::positions() const {
  std::vector<int> out;
  for (CubeWord bits = mask_; bits != 0; bits &= bits - 1) {
    out.push_back(std::countr_zero(bits) + 1);
  }
  return out;
}

CircledSet circled_set(const Vertex& x, Dimension n) {
  require_valid(x, n);
  return CircledSet(x.cube_word);
}

std::vector<IweDiagram> enumerate_diagrams(const Vertex& x, Dimension n) {
  require_valid(x, n);
  std::vector<IweDiagram> out;
  visit_diagrams(CircledSet(x.cube_word), x.cycle_digit, n.value(), [&](const IweDiagram& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool is_well_formed(const IweDiagram& d) {
  const int n = d.n;
  if (n < kMinDimension || n > kMaxDimension) return false;
  auto in_range = [n](int p) { return p >= 1 && p <= n; };
  auto arc_ok = [&](const LoopArc& a) { return in_range(a.from) && in_range(a.to); };
  if ((d.circled.mask() >> n) != 0 || !in_range(d.target_cycle_digit)) return false;
  if (!arc_ok(d.initial_end) || !arc_ok(d.terminal_end)) return false;
  if (d.initial_end.from != 1 || d.terminal_end.to != d.target_cycle_digit) return false;

  if (d.circled.empty()) {
    return !d.interval && d.initial_end.to == d.target_cycle_digit &&
           d.terminal_end.edge_count(n) == 0;
  }
  if (!d.interval || !arc_ok(*d.interval)) return false;
  const LoopArc& iv = *d.interval;
  if (!d.circled.contains(iv.from) || !d.circled.contains(iv.to)) return false;
  if (d.initial_end.to != iv.from || d.terminal_end.from != iv.to) return false;
  for (int p : d.circled.positions()) {
    if (!iv.covers(p, n)) return false;
  }
  return true;
}

int diagram_length(const IweDiagram& d) {
  if (!is_well_formed(d)) {
    throw InvalidDiagram("malformed IWE diagram");
  }
  return length_unchecked(d);
}

IweDiagram minimal_diagram(const Vertex& x, Dimension n) {
  require_valid(x, n);
  IweDiagram best;
  int best_len = std::numeric_limits<int>::max();
  visit_diagrams(CircledSet(x.cube_word), x.cycle_digit, n.value(), [&](const IweDiagram& d) {
    const int len = length_unchecked(d);
    if (len < best_len) {
      best_len = len;
      best = d;
    }
    return true;
  });
  return best;
}

int distance_from_base(const Vertex& x, Dimension n) {
  require_valid(x, n);
  int best = std::numeric_limits<int>::max();
  visit_diagrams(CircledSet(x.cube_word), x.cycle_digit, n.value(), [&](const IweDiagram& d) {
    best = std::min(best, length_unchecked(d));
    return true;
  });
  return best;
}

Canonicalizer::Canonicalizer(const Vertex& anchor, Dimension n)
    : n_(n.value()), shift_(anchor.cycle_digit - 1), mask_(n.word_mask()), offset_(0) {
  require_valid(anchor, n);
  offset_ = rotate_down(anchor.cube_word, shift_, n_, mask_);
}

Vertex Canonicalizer::to_base_frame(const Vertex& v) const {
  return Vertex{rotate_down(v.cube_word, shift_, n_, mask_) ^ offset_,
                (v.cycle_digit - 1 - shift_ + n_) % n_ + 1};
}

Vertex Canonicalizer::from_base_frame(const Vertex& v) const {
  return Vertex{rotate_up(v.cube_word ^ offset_, shift_, n_, mask_),
                (v.cycle_digit - 1 + shift_) % n_ + 1};
}

Vertex canonicalize(const Vertex& a, const Vertex& b, Dimension n) {
  require_valid(b, n);
  return Canonicalizer(a, n).to_base_frame(b);
}

int distance(const Vertex& a, const Vertex& b, Dimension n) {
  return distance_from_base(canonicalize(a, b, n), n);
}

PathTrace shortest_path(const Vertex& a, const Vertex& b, Dimension n) {
  const Canonicalizer frame(a, n);
  require_valid(b, n);
  const Vertex target = frame.to_base_frame(b);
  const IweDiagram d = minimal_diagram(target, n);
  const int nn = n.value();

  std::vector<Vertex> walk{base_vertex()};
  auto move_along = [&](const LoopArc& arc, bool flip_circled) {
    Vertex cur = walk.back();
    for (int e = arc.edge_count(nn); e > 0; --e) {
      cur.cycle_digit = step(cur.cycle_digit, arc.direction, nn);
      walk.push_back(cur);
      if (flip_circled && d.circled.contains(cur.cycle_digit)) {
        cur.cube_word = flip_digit(cur.cube_word, cur.cycle_digit);
        walk.push_back(cur);
      }
    }
  };

  move_along(d.initial_end, false);
  if (d.interval) {
    Vertex cur = walk.back();
    cur.cube_word = flip_digit(cur.cube_word, cur.cycle_digit);
    walk.push_back(cur);
    move_along(*d.interval, true);
  }
  move_along(d.terminal_end, false);

  PathTrace trace;
  trace.vertices.reserve(walk.size());
  for (const auto& v : walk) trace.vertices.push_back(frame.from_base_frame(v));
  return trace;
}

}  // namespace ccc
