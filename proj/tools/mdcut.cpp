// Command-line front end: mdcut <subcommand> ...
//
// Exit codes: 0 success / positive answer, 1 negative answer, 2 usage,
// input or precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mdcut/bench.hpp"
#include "mdcut/connectivity.hpp"
#include "mdcut/cut.hpp"
#include "mdcut/dcel.hpp"
#include "mdcut/embedding.hpp"
#include "mdcut/errors.hpp"
#include "mdcut/generators.hpp"
#include "mdcut/graph_io.hpp"
#include "mdcut/oracle.hpp"

namespace {

using namespace mdcut;

void print_list(std::ostream& out, const VertexList& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
}

RotationSystem rotation_for(const GraphFile& file) {
  if (file.rotation) {
    const auto check = validate_embedding(file.graph, *file.rotation);
    if (!check.ok()) throw InputError("rot block rejected: " + check.reason);
    return *file.rotation;
  }
  auto rot = embed(file.graph);
  if (!rot) throw ContractViolation("graph is not planar");
  return *rot;
}

int cmd_embed(const std::string& path, const std::string& out_path) {
  const GraphFile file = read_graph_file(path);
  std::optional<RotationSystem> rot;
  if (file.rotation) {
    const auto check = validate_embedding(file.graph, *file.rotation);
    if (!check.ok()) {
      std::cout << "INVALID " << check.reason << '\n';
      return 1;
    }
    rot = file.rotation;
  } else {
    rot = embed(file.graph);
  }
  if (!rot) {
    std::cout << "NOT-PLANAR\n";
    return 1;
  }
  if (out_path.empty()) {
    write_graph(std::cout, file.graph, &*rot);
  } else {
    write_graph_file(out_path, file.graph, &*rot);
  }
  return 0;
}

int cmd_faces(const std::string& path) {
  const GraphFile file = read_graph_file(path);
  const RotationSystem rot = rotation_for(file);
  for (const VertexList& face : list_faces(Dcel(file.graph, rot))) {
    std::cout << "face " << face.size() << ":";
    for (VertexId v : face) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

MinDiscCutResult run_cut(const GraphFile& file, bool validate) {
  MinDiscCutOptions options;
  options.rotation = file.rotation ? &*file.rotation : nullptr;
  options.validate = validate;
  options.self_verify = false;
  if (file.rotation && !validate) {
    const auto check = validate_embedding(file.graph, *file.rotation);
    if (!check.ok()) throw InputError("rot block rejected: " + check.reason);
  }
  return find_min_disc_cut(file.graph, options);
}

int cmd_decide(const std::string& path, bool validate) {
  const auto result = run_cut(read_graph_file(path), validate);
  std::cout << (result.cut ? "yes" : "no") << '\n';
  return result.cut ? 0 : 1;
}

int cmd_cut(const std::string& path, bool validate, bool verify, bool trace) {
  const GraphFile file = read_graph_file(path);
  const auto result = run_cut(file, validate);
  if (trace) {
    std::cout << "# branch " << to_string(result.branch) << ", large faces " << result.large_faces << '\n';
    for (std::size_t i = 0; i < result.paths.size(); ++i) {
      std::cout << "# R" << i + 1 << ' ';
      print_list(std::cout, result.paths[i]);
      std::cout << '\n';
    }
    if (!result.aux_cycle.empty()) {
      std::cout << "# aux-cycle ";
      print_list(std::cout, result.aux_cycle);
      std::cout << '\n';
    }
    for (const auto& line : result.log) std::cout << "# " << line << '\n';
  }
  if (!result.cut) {
    std::cout << "NULL near-triangulation\n";
    return 1;
  }
  std::cout << "CUT ";
  print_list(std::cout, *result.cut);
  std::cout << '\n';
  if (verify) {
    const CutReport report = verify_cut(file.graph, *result.cut);
    if (!report.minimal || !report.disconnected) {
      std::cout << "CONTRACT-VIOLATION cut is " << (report.minimal ? "connected" : "not minimal") << '\n';
      return 2;
    }
    std::cout << "VERIFIED minimal disconnected\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::vector<int>& vertices) {
  const GraphFile file = read_graph_file(path);
  const VertexList cut(vertices.begin(), vertices.end());
  const CutReport report = verify_cut(file.graph, cut);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "cut: ";
  print_list(std::cout, report.cut);
  std::cout << "\nis_cut: " << yes(report.is_cut) << "\nminimal: " << yes(report.minimal)
            << "\ndisconnected: " << yes(report.disconnected) << '\n';
  for (const auto& c : report.side_components) {
    std::cout << "side: ";
    print_list(std::cout, c);
    std::cout << '\n';
  }
  for (const auto& c : report.cut_components) {
    std::cout << "cut-component: ";
    print_list(std::cout, c);
    std::cout << '\n';
  }
  return report.minimal ? 0 : 1;
}

int cmd_menger(const std::string& path, int s, int t, int cap) {
  const GraphFile file = read_graph_file(path);
  const PathBundle bundle = menger_paths(file.graph, s, t, cap > 0 ? std::optional<int>(cap) : std::nullopt);
  std::cout << "# kappa " << bundle.kappa() << '\n';
  for (const Path& p : bundle.paths) {
    print_list(std::cout, p);
    std::cout << '\n';
  }
  return 0;
}

int cmd_oracle(const std::string& path, const std::string& which, int bound) {
  const GraphFile file = read_graph_file(path);
  const RotationSystem rot = rotation_for(file);
  const Graph& g = file.graph;
  std::vector<OracleCheck> checks;
  const bool all = which == "all";
  if (which == "shapes" || all) {
    const auto faces = list_large_faces(Dcel(g, rot)).size();
    if (faces <= 1) {
      checks.push_back(check_near_triangulation_cut_shapes(g, rot, bound));
    } else {
      OracleCheck skip;
      skip.name = "shapes";
      skip.applicable = false;
      skip.note = std::to_string(faces) + " large faces";
      checks.push_back(skip);
    }
  }
  if (which == "bound" || all) checks.push_back(check_component_bound(g, rot, bound));
  if (which == "stable" || all) checks.push_back(check_no_stable_cut(g, rot, bound));
  if (which == "cleavable" || all) checks.push_back(check_cleavable(g, bound));
  if (which == "extension" || all) checks.push_back(check_auxiliary_extension(g, rot, bound));
  if (which == "menger" || all) checks.push_back(check_menger(g, bound));

  bool ok = true;
  for (const auto& c : checks) {
    if (!c.applicable) {
      std::cout << "SKIP " << c.name << ": " << c.note << '\n';
    } else if (c.passed) {
      std::cout << "PASS " << c.name << (c.note.empty() ? "" : " (" + c.note + ")") << '\n';
    } else {
      ok = false;
      for (const auto& f : c.failures) std::cout << "FAIL " << c.name << ": " << f << '\n';
    }
  }
  return ok ? 0 : 1;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& out_path) {
  const CarveResult result = generate(spec);
  if (out_path.empty() || out_path == "-") {
    write_graph(std::cout, result.plane.graph, &result.plane.rotation);
  } else {
    write_graph_file(out_path, result.plane.graph, &result.plane.rotation);
  }
  std::cerr << "n=" << result.plane.graph.order() << " m=" << result.plane.graph.size()
            << " large_faces=" << result.faces << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal disconnected cuts of 4-connected planar graphs"};
  app.require_subcommand(1);
  std::string file;
  std::string out_path;

  auto* embed_cmd = app.add_subcommand("embed", "Embed a planar graph and print it with rot lines");
  embed_cmd->add_option("file", file, "graph file")->required();
  embed_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* faces_cmd = app.add_subcommand("faces", "List faces as 'face <len>: v1 v2 ...'");
  faces_cmd->add_option("file", file, "graph file")->required();

  bool validate = false;
  bool verify = false;
  bool trace = false;
  auto* decide_cmd = app.add_subcommand("decide", "Print yes if a minimal disconnected cut exists, else no");
  decide_cmd->add_option("file", file, "graph file")->required();
  decide_cmd->add_flag("--validate", validate, "check planarity and 4-connectivity first");

  auto* cut_cmd = app.add_subcommand("cut", "Find a minimal disconnected cut");
  cut_cmd->add_option("file", file, "graph file")->required();
  cut_cmd->add_flag("--validate", validate, "check planarity and 4-connectivity first");
  cut_cmd->add_flag("--verify", verify, "verify the cut before reporting success");
  cut_cmd->add_flag("--trace", trace, "print intermediate paths and the G^∇ cycle as # lines");

  std::vector<int> cut_vertices;
  auto* verify_cmd = app.add_subcommand("verify", "Report on a vertex set: cut, minimal, disconnected");
  verify_cmd->add_option("file", file, "graph file")->required();
  verify_cmd->add_option("vertices", cut_vertices, "cut vertices")->required();

  int s = 0;
  int t = 0;
  int cap = 0;
  auto* menger_cmd = app.add_subcommand("menger", "Internally disjoint s-t paths, one per line");
  menger_cmd->add_option("file", file, "graph file")->required();
  menger_cmd->add_option("s", s, "source")->required();
  menger_cmd->add_option("t", t, "sink")->required();
  menger_cmd->add_option("--cap", cap, "stop after this many paths (0 = no cap)");

  std::string which = "all";
  int bound = kDefaultOracleBound;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force structural checks on a small graph");
  oracle_cmd->add_option("file", file, "graph file")->required();
  oracle_cmd->add_option("--check", which, "which check")
      ->check(CLI::IsMember({"shapes", "bound", "stable", "cleavable", "extension", "menger", "all"}));
  oracle_cmd->add_option("--bound", bound, "refuse graphs with more vertices")->check(CLI::Range(1, kOracleCeiling));

  GeneratorSpec spec;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a test instance with its embedding");
  gen_cmd->add_option("--family", spec.family, "family")
      ->check(CLI::IsMember({"octahedron", "icosahedron", "antiprism", "counter-3conn", "random-triangulation",
                             "random-4conn", "carved"}));
  gen_cmd->add_option("--n", spec.n, "vertex count (antiprism: ring size)");
  gen_cmd->add_option("--faces", spec.faces, "large faces to carve");
  gen_cmd->add_option("--seed", spec.seed, "random seed");
  gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  gen_cmd->add_flag("--allow-touching", spec.carve.allow_touching, "let carved faces share vertices");
  gen_cmd->add_flag("--deep-carve", spec.carve.deep, "grow carved faces beyond quadrilaterals");

  BenchOptions bench;
  std::string sizes;
  auto* bench_cmd = app.add_subcommand("bench", "Time the cut search on doubling sizes; CSV n,ms,ratio");
  bench_cmd->add_option("--family", bench.family, "generator family")->check(CLI::IsMember({"carved"}));
  bench_cmd->add_option("--sizes", sizes, "e.g. 1k,2k,4k or 2^10..2^20")->required();
  bench_cmd->add_option("--reps", bench.repetitions, "timed samples per size (median is reported)")
      ->check(CLI::Range(5, 1000));
  bench_cmd->add_option("--instances", bench.instances, "carved instances per size (median is reported)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--faces", bench.faces, "large faces per instance (0 = n/16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*embed_cmd) return cmd_embed(file, out_path);
    if (*faces_cmd) return cmd_faces(file);
    if (*decide_cmd) return cmd_decide(file, validate);
    if (*cut_cmd) return cmd_cut(file, validate, verify, trace);
    if (*verify_cmd) return cmd_verify(file, cut_vertices);
    if (*menger_cmd) return cmd_menger(file, s, t, cap);
    if (*oracle_cmd) return cmd_oracle(file, which, bound);
    if (*gen_cmd) return cmd_gen(spec, out_path);
    if (*bench_cmd) {
      bench.sizes = parse_sizes(sizes);
      write_bench_csv(std::cout, run_bench(bench, &std::cerr));
      return 0;
    }
  } catch (const ContractViolation& e) {
    std::cout << "CONTRACT-VIOLATION " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
