#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "ccc/labeling.hpp"

using namespace ccc;

namespace {

// Edge-and-kind preservation over the whole vertex set, plus injectivity.
bool preserves_structure(const Automorphism& phi, Dimension n) {
  std::vector<bool> hit(vertex_count(n), false);
  for (VertexIndex i = 0; i < vertex_count(n); ++i) {
    const Vertex x = vertex_at(i, n);
    const Vertex fx = phi.apply(x);
    if (hit[index_of(fx, n)]) return false;
    hit[index_of(fx, n)] = true;
    const auto nb = neighbors(x, n);
    for (int j = 0; j < 3; ++j) {
      const Vertex fy = phi.apply(nb[j]);
      if (!are_adjacent(fx, fy, n)) return false;
      if (classify_edge(fx, fy, n) != classify_edge(x, nb[j], n)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("labeling") {

TEST_CASE("base anchor with Forward orientation is the identity") {
  for (int nn = 3; nn <= 8; ++nn) {
    const Dimension n(nn);
    const Automorphism id = labeling_from(base_vertex(), Orientation::Forward, n);
    bool ok = true;
    for (VertexIndex i = 0; i < vertex_count(n); ++i) {
      ok = ok && id.apply(vertex_at(i, n)) == vertex_at(i, n);
    }
    CHECK(ok);
  }
}

TEST_CASE("reversing the base cycle") {
  const Dimension n(3);
  const Automorphism r = labeling_from(base_vertex(), Orientation::Reverse, n);
  CHECK(r.apply(parse_vertex("000:1", n)) == parse_vertex("000:1", n));
  CHECK(r.apply(parse_vertex("000:2", n)) == parse_vertex("000:3", n));
  CHECK(r.apply(parse_vertex("000:3", n)) == parse_vertex("000:2", n));
  CHECK(preserves_structure(r, n));
}

TEST_CASE("anchor image") {
  const Dimension n(3);
  const Automorphism a = labeling_from(parse_vertex("100:1", n), Orientation::Forward, n);
  CHECK(a.apply(parse_vertex("000:1", n)) == parse_vertex("100:1", n));
  CHECK(a.anchor() == parse_vertex("100:1", n));
  CHECK(a.orientation() == Orientation::Forward);
  CHECK(identity_automorphism(n).apply(parse_vertex("010:2", n)) == parse_vertex("010:2", n));
  CHECK_THROWS_AS(a.apply(Vertex{0, 9}), InvalidVertex);
  CHECK_THROWS_AS(labeling_from(Vertex{0, 0}, Orientation::Forward, n), InvalidVertex);
}

TEST_CASE("all labelings are distinct automorphisms") {
  for (int nn = 3; nn <= 6; ++nn) {
    const Dimension n(nn);
    std::set<std::vector<VertexIndex>> maps;
    bool ok = true;
    for (VertexIndex i = 0; i < vertex_count(n); ++i) {
      for (auto o : {Orientation::Forward, Orientation::Reverse}) {
        const Automorphism phi = labeling_from(vertex_at(i, n), o, n);
        ok = ok && preserves_structure(phi, n);
        maps.insert(phi.image_table());
      }
    }
    CHECK_MESSAGE(ok, "n=" << nn);
    CHECK(maps.size() == automorphism_group_size(n));
  }
}

TEST_CASE("sweep order does not change the labeling") {
  for (int nn = 3; nn <= 7; ++nn) {
    const Dimension n(nn);
    for (VertexIndex i = 0; i < vertex_count(n); i += 3) {
      for (auto o : {Orientation::Forward, Orientation::Reverse}) {
        const Automorphism up = labeling_from_sweep(vertex_at(i, n), o, n, false);
        const Automorphism down = labeling_from_sweep(vertex_at(i, n), o, n, true);
        REQUIRE(up.image_table() == down.image_table());
        // Same map as the closed form that composition materializes.
        REQUIRE(up.after(identity_automorphism(n)).image_table() == up.image_table());
      }
    }
  }
}

TEST_CASE("lazy automorphisms above the materialization limit") {
  const Dimension n(kMaterializeLimit + 1);
  const Vertex anchor{0x1234u, 5};
  const Automorphism phi = labeling_from(anchor, Orientation::Reverse, n);
  CHECK_FALSE(phi.materialized());
  CHECK(phi.apply(base_vertex()) == anchor);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<VertexIndex> pick(0, vertex_count(n) - 1);
  for (int t = 0; t < 2000; ++t) {
    const Vertex x = vertex_at(pick(rng), n);
    const auto nb = neighbors(x, n);
    const Vertex fx = phi.apply(x);
    for (int j = 0; j < 3; ++j) {
      REQUIRE(classify_edge(fx, phi.apply(nb[j]), n) == classify_edge(x, nb[j], n));
    }
    REQUIRE(phi.inverse().apply(fx) == x);
  }
  CHECK(labeling_from(base_vertex(), Orientation::Forward, Dimension(8)).materialized());
}

TEST_CASE("inverse and composition") {
  const Dimension n(5);
  const Automorphism a = labeling_from(parse_vertex("10110:3", n), Orientation::Reverse, n);
  const Automorphism b = labeling_from(parse_vertex("01001:5", n), Orientation::Forward, n);
  CHECK(a.after(a.inverse()) == identity_automorphism(n));
  CHECK(a.inverse().after(a) == identity_automorphism(n));
  const Automorphism ab = a.after(b);
  for (VertexIndex i = 0; i < vertex_count(n); ++i) {
    const Vertex x = vertex_at(i, n);
    REQUIRE(ab.apply(x) == a.apply(b.apply(x)));
  }
  CHECK(preserves_structure(ab, n));
}

TEST_CASE("swap_automorphism examples") {
  const Dimension n3(3);
  for (auto [u, v] : {std::pair{"000:1", "100:1"}, std::pair{"000:1", "000:3"}}) {
    const Vertex a = parse_vertex(u, n3);
    const Vertex b = parse_vertex(v, n3);
    const Automorphism phi = swap_automorphism(a, b, n3);
    CHECK(phi.apply(a) == b);
    CHECK(phi.apply(b) == a);
  }
  const Dimension n4(4);
  const Vertex u = parse_vertex("0000:2", n4);
  const Vertex v = parse_vertex("0000:3", n4);
  const Automorphism phi = swap_automorphism(u, v, n4);
  CHECK(phi.apply(u) == v);
  CHECK(phi.apply(v) == u);
  int preserved = 0;
  for_each_edge(n4, [&](const Edge& e) {
    if (are_adjacent(phi.apply(e.u), phi.apply(e.v), n4)) ++preserved;
  });
  CHECK(preserved == 96);
  CHECK_THROWS_AS(swap_automorphism(parse_vertex("000:1", n3), parse_vertex("010:1", n3), n3),
                  NotAdjacent);
}

TEST_CASE("swap automorphisms on every edge") {
  for (int nn = 3; nn <= 6; ++nn) {
    const Dimension n(nn);
    bool ok = true;
    for_each_edge(n, [&](const Edge& e) {
      if (!ok) return;
      const Automorphism phi = swap_automorphism(e.u, e.v, n);
      ok = phi.apply(e.u) == e.v && phi.apply(e.v) == e.u && preserves_structure(phi, n);
    });
    CHECK_MESSAGE(ok, "n=" << nn);
  }
}

TEST_CASE("automorphism_group_size") {
  CHECK(automorphism_group_size(Dimension(3)) == 48);
  CHECK(automorphism_group_size(Dimension(4)) == 128);
  CHECK(automorphism_group_size(Dimension(7)) == 1792);
}

TEST_CASE("hypercube automorphisms") {
  const Dimension n3(3);
  const auto id = hypercube_automorphism_from(0, {1, 2, 3}, n3);
  for (CubeWord w = 0; w < 8; ++w) CHECK(id.apply(w) == w);

  const CubeWord t = parse_vertex("101:1", n3).cube_word;
  const auto shift = hypercube_automorphism_from(t, {1, 2, 3}, n3);
  CHECK(shift.apply(parse_vertex("000:1", n3).cube_word) == t);
  CHECK(shift.apply(parse_vertex("111:1", n3).cube_word) == parse_vertex("010:1", n3).cube_word);

  // Digits move before the translation is applied.
  const auto both = hypercube_automorphism_from(0b001, {2, 3, 1}, n3);
  CHECK(both.apply(0b001) == (0b010 ^ 0b001));

  CHECK_THROWS_AS(hypercube_automorphism_from(0, {1, 1, 3}, n3), InvalidPermutation);
  CHECK_THROWS_AS(hypercube_automorphism_from(0, {1, 2}, n3), InvalidPermutation);
  CHECK_THROWS_AS(hypercube_automorphism_from(0, {0, 1, 2}, n3), InvalidPermutation);
}

TEST_CASE("hypercube translations times digit permutations") {
  auto check_dimension = [](int nn, int perm_stride) {
    const Dimension n(nn);
    const CubeWord words = CubeWord{1} << nn;
    std::vector<int> perm(nn);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::vector<CubeWord>> maps;
    int index = 0;
    bool adjacency = true;
    do {
      if (index++ % perm_stride != 0) continue;
      for (CubeWord t = 0; t < words; ++t) {
        const auto h = hypercube_automorphism_from(t, perm, n);
        std::vector<CubeWord> image(words);
        for (CubeWord w = 0; w < words; ++w) image[w] = h.apply(w);
        for (CubeWord w = 0; w < words; ++w) {
          for (CubeWord nb : hypercube_neighbors(w, n)) {
            adjacency = adjacency && std::popcount(image[w] ^ image[nb]) == 1;
          }
        }
        maps.insert(image);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(adjacency);
    return maps.size();
  };
  CHECK(check_dimension(3, 1) == 48);
  // n = 4: every fifth permutation, all translations.
  CHECK(check_dimension(4, 5) == 5 * 16);
}

}  // TEST_SUITE
