#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "ccc/balance.hpp"
#include "ccc/iwe.hpp"
#include "ccc/labeling.hpp"
#include "ccc/oracle.hpp"

namespace ccc {

namespace {

std::uint64_t half_count(Dimension n) { return vertex_count(n) / 2; }

std::string sizes_text(const PartitionSizes& s) {
  return std::to_string(s.wuv) + "," + std::to_string(s.wvu) + "," + std::to_string(s.equal);
}

std::string edge_text(const Edge& e, Dimension n) {
  return format_vertex(e.u, n) + "-" + format_vertex(e.v, n);
}

CheckResult make_check(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void fail(CheckResult& c, std::string counterexample) {
  if (c.passed) {
    c.passed = false;
    c.counterexample = std::move(counterexample);
  }
}

CheckResult check_iwe_against_bfs(Dimension n) {
  CheckResult c = make_check("iwe_distance_equals_bfs");
  const VertexIndex total = vertex_count(n);
  bool lipschitz = true;
  for (VertexIndex a = 0; a < total && c.passed; ++a) {
    const Vertex source = vertex_at(a, n);
    const DistanceField field = bfs_distances(source, n);
    lipschitz = lipschitz && is_lipschitz_field(field, n);
    for (VertexIndex b = 0; b < total; ++b) {
      const Vertex target = vertex_at(b, n);
      const int iwe = distance(source, target, n);
      if (iwe != field.dist[b]) {
        fail(c, format_vertex(source, n) + " -> " + format_vertex(target, n) +
                    ": iwe=" + std::to_string(iwe) + " bfs=" + std::to_string(field.dist[b]));
        break;
      }
    }
  }
  if (!lipschitz) fail(c, "BFS distance field violates the adjacency Lipschitz property");
  c.detail = std::to_string(total * total) + " ordered pairs";
  return c;
}

CheckResult check_partition_against_oracle(const Edge& e, Dimension n, const char* name) {
  CheckResult c = make_check(name);
  const PartitionSizes iwe = w_partition(e.u, e.v, n).sizes;
  const PartitionSizes bfs = bfs_w_partition(e.u, e.v, n).sizes;
  c.detail = "edge " + edge_text(e, n) + " sizes " + sizes_text(iwe);
  if (!(iwe == bfs)) fail(c, "iwe " + sizes_text(iwe) + " vs bfs " + sizes_text(bfs));
  return c;
}

CheckResult check_cube_fast_path(Dimension n) {
  CheckResult c = make_check("cube_fast_path_matches_generic");
  std::uint64_t count = 0;
  for_each_edge(n, [&](const Edge& e) {
    if (e.kind != EdgeKind::CubeEdge || !c.passed) return;
    ++count;
    const auto fast = w_partition(e.u, e.v, n, false, PartitionMethod::Auto).sizes;
    const auto generic = w_partition(e.u, e.v, n, false, PartitionMethod::Generic).sizes;
    if (!(fast == generic)) {
      fail(c, edge_text(e, n) + ": fast " + sizes_text(fast) + " generic " + sizes_text(generic));
    }
  });
  c.detail = std::to_string(count) + " cube edges";
  return c;
}

CheckResult check_exhaustive_balance(const BalanceVerdict& v, Dimension n) {
  CheckResult c = make_check("distance_balanced_all_edges");
  c.detail = std::to_string(v.edges_checked) + " edges";
  if (v.first_unbalanced) fail(c, "unbalanced edge " + edge_text(*v.first_unbalanced, n));
  if (!v.orbit_consistent.value_or(false)) fail(c, "edge sizes differ within an edge orbit");
  return c;
}

CheckResult check_cube_sizes(const BalanceVerdict& v, Dimension n) {
  CheckResult c = make_check("cube_edge_sizes");
  const PartitionSizes expected{half_count(n), half_count(n), 0};
  c.detail = "expected " + sizes_text(expected);
  if (!(v.cube_edge.sizes == expected)) fail(c, "got " + sizes_text(v.cube_edge.sizes));
  return c;
}

CheckResult check_ndb_dichotomy(const BalanceVerdict& v, Dimension n) {
  CheckResult c = make_check("ndb_iff_even");
  const bool even = n.value() % 2 == 0;
  if (even) {
    c.detail = "expected constant " + std::to_string(half_count(n));
    if (v.ndb_constant != half_count(n)) fail(c, "ndb constant missing or wrong");
    if (v.cycle_edge.sizes.equal != 0) fail(c, "cycle edge equal set nonempty");
  } else {
    c.detail = "expected no constant";
    if (v.ndb_constant) fail(c, "unexpected ndb constant " + std::to_string(*v.ndb_constant));
    const auto witness = cycle_edge_equidistant_witness(n);
    if (!witness) {
      fail(c, "vertex " + format_vertex(Vertex{0u, (n.value() + 1) / 2}, n) +
                  " is not equidistant from the cycle edge ends");
    } else {
      const Edge e = representative_edges(n).cycle;
      const int du = distance(*witness, e.u, n);
      if (du != (n.value() - 1) / 2) {
        fail(c, "witness distance " + std::to_string(du));
      }
    }
  }
  return c;
}

// Image table as preserved edges: every neighbor j of x maps to neighbor j'
// of phi(x) with the cube neighbor (j = 2) going to the cube neighbor.
std::optional<std::string> automorphism_defect(const Automorphism& phi, Dimension n) {
  const VertexIndex total = vertex_count(n);
  std::vector<bool> hit(total, false);
  for (VertexIndex i = 0; i < total; ++i) {
    const Vertex x = vertex_at(i, n);
    const Vertex fx = phi.apply(x);
    const VertexIndex fi = index_of(fx, n);
    if (hit[fi]) return "not injective at " + format_vertex(x, n);
    hit[fi] = true;
    const auto nb = neighbors_unchecked(x, n.value());
    const auto fnb = neighbors_unchecked(fx, n.value());
    for (int j = 0; j < 3; ++j) {
      const Vertex fy = phi.apply(nb[j]);
      const bool cube_image = fy == fnb[2];
      const bool cycle_image = fy == fnb[0] || fy == fnb[1];
      if ((j == 2 && !cube_image) || (j != 2 && !cycle_image)) {
        return "edge " + format_vertex(x, n) + "-" + format_vertex(nb[j], n) +
               " not preserved with its kind";
      }
    }
  }
  return std::nullopt;
}

CheckResult check_labelings(Dimension n) {
  CheckResult c = make_check("labelings_distinct_and_preserving");
  std::set<std::pair<VertexIndex, VertexIndex>> signatures;
  const VertexIndex total = vertex_count(n);
  const Vertex second{0u, 2};
  for (VertexIndex i = 0; i < total && c.passed; ++i) {
    for (auto o : {Orientation::Forward, Orientation::Reverse}) {
      const Automorphism phi = labeling_from(vertex_at(i, n), o, n);
      // Maps with different images of (0,1) or (0,2) are different maps.
      signatures.emplace(index_of(phi.apply(base_vertex()), n), index_of(phi.apply(second), n));
      if (auto defect = automorphism_defect(phi, n)) {
        fail(c, "labeling at " + format_vertex(vertex_at(i, n), n) + ": " + *defect);
        break;
      }
    }
  }
  c.detail = std::to_string(signatures.size()) + " distinct of expected " +
             std::to_string(automorphism_group_size(n));
  if (c.passed && signatures.size() != automorphism_group_size(n)) fail(c, c.detail);
  return c;
}

CheckResult check_swaps(Dimension n) {
  CheckResult c = make_check("swap_automorphisms");
  std::uint64_t count = 0;
  for_each_edge(n, [&](const Edge& e) {
    if (!c.passed) return;
    ++count;
    const Automorphism phi = swap_automorphism(e.u, e.v, n);
    if (phi.apply(e.u) != e.v || phi.apply(e.v) != e.u) {
      fail(c, edge_text(e, n) + ": endpoints not swapped");
    } else if (auto defect = automorphism_defect(phi, n)) {
      fail(c, edge_text(e, n) + ": " + *defect);
    }
  });
  c.detail = std::to_string(count) + " edges";
  return c;
}

CheckResult check_automorphism_count(Dimension n) {
  CheckResult c = make_check("automorphism_count_bruteforce");
  const std::uint64_t brute = count_automorphisms_bruteforce(n);
  const std::uint64_t formula = automorphism_group_size(n);
  c.detail = "brute " + std::to_string(brute) + " formula " + std::to_string(formula);
  if (brute != formula) fail(c, c.detail);
  return c;
}

CheckResult check_hypercube_factorization(Dimension n) {
  CheckResult c = make_check("hypercube_translation_permutation_product");
  const int nn = n.value();
  const CubeWord words = CubeWord{1} << nn;
  std::vector<int> perm(nn);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<CubeWord>> maps;
  std::uint64_t built = 0;
  do {
    for (CubeWord t = 0; t < words && c.passed; ++t) {
      const auto h = hypercube_automorphism_from(t, perm, n);
      std::vector<CubeWord> image(words);
      for (CubeWord w = 0; w < words; ++w) image[w] = h.apply(w);
      for (CubeWord w = 0; w < words && c.passed; ++w) {
        for (int i = 1; i <= nn; ++i) {
          if (std::popcount(image[w] ^ image[flip_digit(w, i)]) != 1) {
            fail(c, "translation " + std::to_string(t) + " breaks adjacency");
            break;
          }
        }
      }
      maps.insert(std::move(image));
      ++built;
    }
  } while (c.passed && std::next_permutation(perm.begin(), perm.end()));
  std::uint64_t expected = words;
  for (int i = 2; i <= nn; ++i) expected *= static_cast<std::uint64_t>(i);
  c.detail = std::to_string(maps.size()) + " distinct of " + std::to_string(expected);
  if (c.passed && (maps.size() != expected || built != expected)) fail(c, c.detail);
  return c;
}

DimensionReport verify_dimension(Dimension n) {
  DimensionReport r;
  r.n = n.value();
  r.vertices = vertex_count(n);
  r.edges = edge_count(n);

  const BalanceVerdict verdict = analyze(n, AnalysisMode::Exhaustive);
  r.distance_balanced = verdict.distance_balanced;
  r.ndb_constant = verdict.ndb_constant;
  r.cube_edge = verdict.cube_edge.sizes;
  r.cycle_edge = verdict.cycle_edge.sizes;

  const RepresentativeEdges reps = representative_edges(n);
  r.checks.push_back(check_iwe_against_bfs(n));
  r.checks.push_back(check_partition_against_oracle(reps.cube, n, "cube_partition_matches_bfs"));
  r.checks.push_back(check_partition_against_oracle(reps.cycle, n, "cycle_partition_matches_bfs"));
  r.checks.push_back(check_cube_fast_path(n));
  r.checks.push_back(check_exhaustive_balance(verdict, n));
  r.checks.push_back(check_cube_sizes(verdict, n));
  r.checks.push_back(check_ndb_dichotomy(verdict, n));
  r.checks.push_back(check_labelings(n));
  r.checks.push_back(check_swaps(n));
  if (n.value() <= kMaxAutomorphismSearchDimension) {
    r.checks.push_back(check_automorphism_count(n));
    r.checks.push_back(check_hypercube_factorization(n));
  }
  return r;
}

}  // namespace

VerificationReport verify(int n_max) {
  const Dimension top(n_max);
  if (top.value() > kMaxVerifyDimension) {
    throw DimensionError("verification supports n_max <= " + std::to_string(kMaxVerifyDimension));
  }
  VerificationReport report;
  report.n_max = n_max;
  for (int n = kMinDimension; n <= n_max; ++n) {
    report.dimensions.push_back(verify_dimension(Dimension(n)));
    for (const auto& c : report.dimensions.back().checks) {
      ++report.checks_run;
      report.all_passed = report.all_passed && c.passed;
    }
  }
  return report;
}

}  // namespace ccc
