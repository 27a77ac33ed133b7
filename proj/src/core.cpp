#include "ccc/core.hpp"

#include <charconv>
#include <string>

namespace ccc {

Dimension::Dimension(int n) : n_(n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw DimensionError("dimension n=" + std::to_string(n) + " outside supported range " +
                         std::to_string(kMinDimension) + ".." + std::to_string(kMaxDimension));
  }
}

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::CycleEdge ? "cycle" : "cube";
}

bool is_valid(const Vertex& v, Dimension n) {
  return v.cycle_digit >= 1 && v.cycle_digit <= n.value() && (v.cube_word & ~n.word_mask()) == 0;
}

void require_valid(const Vertex& v, Dimension n) {
  if (!is_valid(v, n)) {
    throw InvalidVertex("vertex (word=" + std::to_string(v.cube_word) +
                        ", k=" + std::to_string(v.cycle_digit) + ") invalid for n=" +
                        std::to_string(n.value()));
  }
}

std::uint64_t vertex_count(Dimension n) {
  return static_cast<std::uint64_t>(n.value()) << n.value();
}

std::uint64_t edge_count(Dimension n) { return 3 * vertex_count(n) / 2; }

std::array<Vertex, 3> neighbors(const Vertex& v, Dimension n) {
  require_valid(v, n);
  return neighbors_unchecked(v, n.value());
}

EdgeKind classify_edge(const Vertex& u, const Vertex& v, Dimension n) {
  require_valid(u, n);
  require_valid(v, n);
  if (u == v) {
    throw NotAdjacent("u and v are the same vertex");
  }
  const int nn = n.value();
  if (u.cube_word == v.cube_word &&
      (v.cycle_digit == cycle_pred(u.cycle_digit, nn) ||
       v.cycle_digit == cycle_succ(u.cycle_digit, nn))) {
    return EdgeKind::CycleEdge;
  }
  if (u.cycle_digit == v.cycle_digit && v.cube_word == flip_digit(u.cube_word, u.cycle_digit)) {
    return EdgeKind::CubeEdge;
  }
  throw NotAdjacent(format_vertex(u, n) + " and " + format_vertex(v, n) + " are not adjacent");
}

bool are_adjacent(const Vertex& u, const Vertex& v, Dimension n) {
  for (const auto& w : neighbors(u, n)) {
    if (w == v) return true;
  }
  return false;
}

EdgeStream::EdgeStream(Dimension n) : n_(n) {}

std::optional<Edge> EdgeStream::next() {
  const VertexIndex total = vertex_count(n_);
  const int nn = n_.value();
  while (index_ < total) {
    const Vertex u = vertex_at(index_, n_);
    if (stage_ == 0) {
      stage_ = 1;
      return Edge{u, Vertex{u.cube_word, cycle_succ(u.cycle_digit, nn)}, EdgeKind::CycleEdge};
    }
    stage_ = 0;
    ++index_;
    if (!cube_digit(u.cube_word, u.cycle_digit)) {
      return Edge{u, Vertex{flip_digit(u.cube_word, u.cycle_digit), u.cycle_digit},
                  EdgeKind::CubeEdge};
    }
  }
  return std::nullopt;
}

void for_each_edge(Dimension n, const std::function<void(const Edge&)>& fn) {
  EdgeStream stream(n);
  while (auto e = stream.next()) fn(*e);
}

std::vector<Edge> edges(Dimension n) {
  std::vector<Edge> out;
  out.reserve(edge_count(n));
  for_each_edge(n, [&](const Edge& e) { out.push_back(e); });
  return out;
}

std::vector<CubeWord> hypercube_neighbors(CubeWord w, Dimension n) {
  if ((w & ~n.word_mask()) != 0) {
    throw InvalidVertex("cube word has bits above position n");
  }
  std::vector<CubeWord> out;
  out.reserve(n.value());
  for (int i = 1; i <= n.value(); ++i) out.push_back(flip_digit(w, i));
  return out;
}

std::string format_vertex(const Vertex& v, Dimension n) {
  std::string s;
  s.reserve(n.value() + 4);
  for (int i = 1; i <= n.value(); ++i) s.push_back(cube_digit(v.cube_word, i) ? '1' : '0');
  s.push_back(':');
  s += std::to_string(v.cycle_digit);
  return s;
}

Vertex parse_vertex(std::string_view text, Dimension n) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("vertex '" + std::string(text) + "' missing ':' separator");
  }
  const auto bits = text.substr(0, colon);
  const auto digit = text.substr(colon + 1);
  if (bits.size() != static_cast<std::size_t>(n.value())) {
    throw ParseError("vertex '" + std::string(text) + "' needs exactly " +
                     std::to_string(n.value()) + " cube digits");
  }
  Vertex v{0, 0};
  for (int i = 1; i <= n.value(); ++i) {
    const char c = bits[i - 1];
    if (c == '1') {
      v.cube_word = flip_digit(v.cube_word, i);
    } else if (c != '0') {
      throw ParseError("vertex '" + std::string(text) + "' has non-binary cube digit");
    }
  }
  int k = 0;
  const auto [ptr, ec] = std::from_chars(digit.data(), digit.data() + digit.size(), k);
  if (ec != std::errc{} || ptr != digit.data() + digit.size() || k < 1 || k > n.value()) {
    throw ParseError("vertex '" + std::string(text) + "' cycle digit must be in 1.." +
                     std::to_string(n.value()));
  }
  v.cycle_digit = k;
  return v;
}

}  // namespace ccc
