// ccc: cube-connected cycles analysis from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 dimension / resource gate.

#include <iostream>
#include <map>
#include <new>
#include <string>

#include <CLI11.hpp>

#include "ccc/balance.hpp"
#include "ccc/iwe.hpp"
#include "ccc/labeling.hpp"
#include "ccc/oracle.hpp"
#include "report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGate = 3;

using ccc::report::Format;

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};

const std::map<std::string, ccc::AnalysisMode> kModes{
    {"representative", ccc::AnalysisMode::Representative},
    {"exhaustive", ccc::AnalysisMode::Exhaustive}};

std::pair<ccc::Vertex, ccc::Vertex> parse_edge(const std::string& text, ccc::Dimension n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ccc::ParseError("edge '" + text + "' must be written u,v");
  }
  return {ccc::parse_vertex(text.substr(0, comma), n), ccc::parse_vertex(text.substr(comma + 1), n)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube-connected cycles: distances, routes, W-sets and balance verdicts"};
  app.require_subcommand(1);

  int n = 0;
  int n_max = 0;
  std::string from_text;
  std::string to_text;
  std::string edge_text;
  std::string kind_text;
  bool with_members = false;
  bool brute_force = false;
  Format format = Format::Table;
  ccc::AnalysisMode mode = ccc::AnalysisMode::Representative;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  auto* analyze = app.add_subcommand("analyze", "Distance-balance verdict for CCC_n");
  analyze->add_option("--n", n, "Dimension (3..30)")->required();
  analyze->add_option("--mode", mode, "representative or exhaustive")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  analyze->add_flag("--with-members", with_members, "List W-set members of the representative edges");
  add_format(analyze);

  auto* distance = app.add_subcommand("distance", "Graph distance between two vertices");
  distance->add_option("--n", n, "Dimension (3..30)")->required();
  distance->add_option("--from", from_text, "Source vertex, e.g. 0101100:6")->required();
  distance->add_option("--to", to_text, "Target vertex")->required();

  auto* route = app.add_subcommand("route", "One shortest path between two vertices");
  route->add_option("--n", n, "Dimension (3..30)")->required();
  route->add_option("--from", from_text, "Source vertex")->required();
  route->add_option("--to", to_text, "Target vertex")->required();
  add_format(route);

  auto* wsets = app.add_subcommand("wsets", "W-set partition for one edge");
  wsets->add_option("--n", n, "Dimension (3..30)")->required();
  auto* edge_opt = wsets->add_option("--edge", edge_text, "Edge as u,v");
  auto* kind_opt = wsets->add_option("--kind", kind_text, "Representative edge kind")
                       ->check(CLI::IsMember({"cube", "cycle"}));
  edge_opt->excludes(kind_opt);
  wsets->add_flag("--with-members", with_members, "List members of each set");
  add_format(wsets);

  auto* verify = app.add_subcommand("verify", "Cross-check everything against brute force");
  verify->add_option("--n-max", n_max, "Largest dimension to verify (<= 9)")->required();
  add_format(verify);

  auto* autcount = app.add_subcommand("autcount", "Size of the automorphism group");
  autcount->add_option("--n", n, "Dimension (3..30)")->required();
  autcount->add_flag("--brute-force", brute_force, "Also count by backtracking (n <= 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const ccc::Dimension dim(n);
      std::cout << ccc::report::render_verdict(ccc::analyze(dim, mode, with_members), format);
    } else if (distance->parsed()) {
      const ccc::Dimension dim(n);
      const auto a = ccc::parse_vertex(from_text, dim);
      const auto b = ccc::parse_vertex(to_text, dim);
      std::cout << ccc::distance(a, b, dim) << '\n';
    } else if (route->parsed()) {
      const ccc::Dimension dim(n);
      const auto a = ccc::parse_vertex(from_text, dim);
      const auto b = ccc::parse_vertex(to_text, dim);
      std::cout << ccc::report::render_route(ccc::shortest_path(a, b, dim), a, b, dim, format);
    } else if (wsets->parsed()) {
      const ccc::Dimension dim(n);
      ccc::Vertex u;
      ccc::Vertex v;
      if (!edge_text.empty()) {
        std::tie(u, v) = parse_edge(edge_text, dim);
      } else if (!kind_text.empty()) {
        const auto reps = ccc::representative_edges(dim);
        const auto& e = kind_text == "cube" ? reps.cube : reps.cycle;
        u = e.u;
        v = e.v;
      } else {
        std::cerr << "wsets: one of --edge or --kind is required\n";
        return kExitUsage;
      }
      std::cout << ccc::report::render_partition(ccc::w_partition(u, v, dim, with_members), dim,
                                                 format);
    } else if (verify->parsed()) {
      const auto report = ccc::verify(n_max);
      std::cout << ccc::report::render_verification(report, format);
      return report.all_passed ? kExitOk : kExitVerifyFailed;
    } else if (autcount->parsed()) {
      const ccc::Dimension dim(n);
      const auto formula = ccc::automorphism_group_size(dim);
      if (!brute_force) {
        std::cout << formula << '\n';
        return kExitOk;
      }
      const auto brute = ccc::count_automorphisms_bruteforce(dim);
      std::cout << "formula     " << formula << '\n' << "brute_force " << brute << '\n';
      if (brute != formula) {
        std::cerr << "automorphism count mismatch\n";
        return kExitVerifyFailed;
      }
    }
  } catch (const ccc::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGate;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitGate;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
