#include "report.hpp"

#include <sstream>

namespace ccc::report {

namespace {

Json nullable(const std::optional<std::uint64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json sizes_json(const PartitionSizes& s) {
  Json j;
  j["wuv"] = s.wuv;
  j["wvu"] = s.wvu;
  j["equal"] = s.equal;
  return j;
}

Json vertex_list(const std::vector<Vertex>& vs, Dimension n) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(format_vertex(v, n));
  return arr;
}

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["detail"] = c.detail;
  j["counterexample"] = c.counterexample ? Json(*c.counterexample) : Json(nullptr);
  return j;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string sizes_csv(const PartitionSizes& s) {
  return std::to_string(s.wuv) + "," + std::to_string(s.wvu) + "," + std::to_string(s.equal);
}

std::vector<CheckResult> verdict_checks(const BalanceVerdict& v) {
  std::vector<CheckResult> out;
  if (!v.exhaustive_checked) return out;
  const Dimension n(v.n);
  CheckResult balanced{"distance_balanced_all_edges", !v.first_unbalanced,
                       std::to_string(v.edges_checked) + " edges", std::nullopt};
  if (v.first_unbalanced) {
    balanced.counterexample =
        format_vertex(v.first_unbalanced->u, n) + "-" + format_vertex(v.first_unbalanced->v, n);
  }
  out.push_back(balanced);
  CheckResult orbit{"edge_orbit_sizes_consistent", v.orbit_consistent.value_or(false),
                    "one size triple per edge kind", std::nullopt};
  if (!orbit.passed) orbit.counterexample = "edge sizes differ within an edge kind";
  out.push_back(orbit);
  return out;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Json partition_json(const WPartition& p, Dimension n) {
  Json j;
  j["u"] = format_vertex(p.edge.u, n);
  j["v"] = format_vertex(p.edge.v, n);
  j["kind"] = std::string(to_string(p.edge.kind));
  j["wuv"] = p.sizes.wuv;
  j["wvu"] = p.sizes.wvu;
  j["equal"] = p.sizes.equal;
  if (p.members) {
    Json m;
    m["wuv"] = vertex_list(p.members->wuv, n);
    m["wvu"] = vertex_list(p.members->wvu, n);
    m["equal"] = vertex_list(p.members->equal, n);
    j["members"] = std::move(m);
  }
  return j;
}

Json verdict_json(const BalanceVerdict& v) {
  const Dimension n(v.n);
  Json j;
  j["n"] = v.n;
  j["vertices"] = vertex_count(n);
  j["edges"] = edge_count(n);
  j["distance_balanced"] = v.distance_balanced;
  j["ndb_constant"] = nullable(v.ndb_constant);
  j["cube_edge"] = partition_json(v.cube_edge, n);
  j["cycle_edge"] = partition_json(v.cycle_edge, n);
  Json checks = Json::array();
  for (const auto& c : verdict_checks(v)) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  j["mode"] = v.mode == AnalysisMode::Exhaustive ? "exhaustive" : "representative";
  j["nicely_distance_balanced"] = v.ndb_constant.has_value();
  j["edges_checked"] = v.edges_checked;
  return j;
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["n_max"] = r.n_max;
  j["all_passed"] = r.all_passed;
  j["checks_run"] = r.checks_run;
  Json reports = Json::array();
  for (const auto& d : r.dimensions) {
    Json dj;
    dj["n"] = d.n;
    dj["vertices"] = d.vertices;
    dj["edges"] = d.edges;
    dj["distance_balanced"] = d.distance_balanced;
    dj["ndb_constant"] = nullable(d.ndb_constant);
    dj["cube_edge"] = sizes_json(d.cube_edge);
    dj["cycle_edge"] = sizes_json(d.cycle_edge);
    Json checks = Json::array();
    for (const auto& c : d.checks) checks.push_back(check_json(c));
    dj["checks"] = std::move(checks);
    reports.push_back(std::move(dj));
  }
  j["reports"] = std::move(reports);
  return j;
}

Json route_json(const PathTrace& path, const Vertex& from, const Vertex& to, Dimension n) {
  Json j;
  j["n"] = n.value();
  j["from"] = format_vertex(from, n);
  j["to"] = format_vertex(to, n);
  j["path"] = vertex_list(path.vertices, n);
  j["length"] = path.length();
  return j;
}

std::string render_verdict(const BalanceVerdict& v, Format format) {
  std::ostringstream out;
  const Dimension n(v.n);
  const std::string ndb = v.ndb_constant ? std::to_string(*v.ndb_constant) : "";
  switch (format) {
    case Format::Json:
      out << verdict_json(v).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "n,mode,vertices,edges,distance_balanced,ndb_constant,"
             "cube_wuv,cube_wvu,cube_equal,cycle_wuv,cycle_wvu,cycle_equal\n";
      out << v.n << ',' << (v.mode == AnalysisMode::Exhaustive ? "exhaustive" : "representative")
          << ',' << vertex_count(n) << ',' << edge_count(n) << ',' << yes_no(v.distance_balanced)
          << ',' << ndb << ',' << sizes_csv(v.cube_edge.sizes) << ','
          << sizes_csv(v.cycle_edge.sizes) << '\n';
      break;
    case Format::Table:
      out << "n                         " << v.n << '\n'
          << "vertices                  " << vertex_count(n) << '\n'
          << "edges                     " << edge_count(n) << '\n'
          << "mode                      "
          << (v.mode == AnalysisMode::Exhaustive ? "exhaustive" : "representative") << '\n'
          << "edges_checked             " << v.edges_checked << '\n'
          << "distance_balanced         " << yes_no(v.distance_balanced) << '\n'
          << "nicely_distance_balanced  " << yes_no(v.ndb_constant.has_value()) << '\n'
          << "ndb_constant              " << (ndb.empty() ? "-" : ndb) << '\n'
          << "cube_edge  (wuv,wvu,eq)   " << sizes_csv(v.cube_edge.sizes) << '\n'
          << "cycle_edge (wuv,wvu,eq)   " << sizes_csv(v.cycle_edge.sizes) << '\n';
      for (const auto& c : verdict_checks(v)) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
      }
      break;
  }
  return out.str();
}

std::string render_verification(const VerificationReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << verification_json(r).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "n,check,passed,detail,counterexample\n";
      for (const auto& d : r.dimensions) {
        for (const auto& c : d.checks) {
          out << d.n << ',' << csv_field(c.name) << ',' << yes_no(c.passed) << ','
              << csv_field(c.detail) << ',' << csv_field(c.counterexample.value_or("")) << '\n';
        }
      }
      break;
    case Format::Table:
      for (const auto& d : r.dimensions) {
        out << "n=" << d.n << "  vertices " << d.vertices << "  edges " << d.edges << '\n';
        for (const auto& c : d.checks) {
          out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail;
          if (c.counterexample) out << "  counterexample: " << *c.counterexample;
          out << '\n';
        }
      }
      out << (r.all_passed ? "all " : "FAILED: not all ") << r.checks_run << " checks passed\n";
      break;
  }
  return out.str();
}

std::string render_route(const PathTrace& path, const Vertex& from, const Vertex& to,
                         Dimension n, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << route_json(path, from, to, n).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "step,vertex\n";
      for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        out << i << ',' << format_vertex(path.vertices[i], n) << '\n';
      }
      break;
    case Format::Table:
      for (const auto& v : path.vertices) out << format_vertex(v, n) << '\n';
      out << "length " << path.length() << '\n';
      break;
  }
  return out.str();
}

std::string render_partition(const WPartition& p, Dimension n, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      Json j;
      j["n"] = n.value();
      const Json part = partition_json(p, n);
      for (const auto& [key, value] : part.items()) j[key] = value;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (p.members) {
        out << "set,vertex\n";
        auto rows = [&](const char* set, const std::vector<Vertex>& vs) {
          for (const auto& v : vs) out << set << ',' << format_vertex(v, n) << '\n';
        };
        rows("wuv", p.members->wuv);
        rows("wvu", p.members->wvu);
        rows("equal", p.members->equal);
      } else {
        out << "wuv,wvu,equal\n" << sizes_csv(p.sizes) << '\n';
      }
      break;
    case Format::Table:
      out << "edge   " << format_vertex(p.edge.u, n) << '-' << format_vertex(p.edge.v, n) << " ("
          << to_string(p.edge.kind) << ")\n"
          << "sizes  " << sizes_csv(p.sizes) << "  (wuv,wvu,equal)\n";
      if (p.members) {
        auto line = [&](const char* set, const std::vector<Vertex>& vs) {
          out << set;
          for (const auto& v : vs) out << ' ' << format_vertex(v, n);
          out << '\n';
        };
        line("wuv:  ", p.members->wuv);
        line("wvu:  ", p.members->wvu);
        line("equal:", p.members->equal);
      }
      break;
  }
  return out.str();
}

}  // namespace ccc::report
