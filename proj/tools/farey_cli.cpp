// fareygraph: command-line front end for the Farey graph laboratory.
//
// Exit codes: 0 success; 1 a check or validation reported a failure;
// 2 bad input (arguments, files, schemas, tokens); 3 a supply, graining,
// or resource limit was hit.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "farey/builders.hpp"
#include "farey/checks.hpp"
#include "farey/errors.hpp"
#include "farey/grain_line.hpp"
#include "farey/graph.hpp"
#include "farey/io.hpp"
#include "farey/splitter.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw farey::InputError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw farey::InputError("cannot write file: " + out_path);
  out << text;
}

std::set<farey::Fraction> label_set(const farey::Graph& g) {
  std::set<farey::Fraction> labels;
  for (const auto& [v, f] : g.labels()) labels.insert(f);
  return labels;
}

int print_criteria(const std::vector<farey::CriterionResult>& results) {
  bool all_pass = true;
  for (const farey::CriterionResult& r : results) {
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion "
              << std::setw(2) << r.number << ": " << r.name << " -- "
              << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace farey;

  CLI::App app{
      "Farey graph laboratory: recursive and determinant builders, grain "
      "lines, edge splitting, and self-check suites"};
  app.require_subcommand(1);
  int exit_code = 0;

  // gen -----------------------------------------------------------------
  std::string gen_kind = "full";
  int gen_depth = 3;
  std::string gen_out;
  std::string gen_format = "json";
  bool gen_chords = false;
  auto* gen = app.add_subcommand(
      "gen", "Build a graph and emit it as JSON, Graphviz text, or SVG");
  gen->add_option("--kind", gen_kind,
                  "halved | full | determinant | gadget (default full)")
      ->check(CLI::IsMember({"halved", "full", "determinant", "gadget"}));
  gen->add_option("--depth", gen_depth, "build depth (default 3)")
      ->check(CLI::Range(0, 16));
  gen->add_option("--out", gen_out, "output file (default stdout)");
  gen->add_option("--format", gen_format, "json | dot | svg (default json)")
      ->check(CLI::IsMember({"json", "dot", "svg"}));
  gen->add_flag("--chords", gen_chords,
                "draw SVG edges as straight chords instead of arcs");
  gen->callback([&]() {
    Graph g;
    if (gen_kind == "halved") {
      g = build_halved_farey(gen_depth).graph;
    } else if (gen_kind == "full") {
      g = build_farey(gen_depth);
    } else if (gen_kind == "determinant") {
      g = build_determinant_graph(label_set(build_farey(gen_depth)));
    } else {
      g = build_k23_with_farey_edges(gen_depth);
    }
    std::string text;
    if (gen_format == "json") {
      std::ostringstream provenance;
      provenance << "fareygraph gen --kind " << gen_kind << " --depth "
                 << gen_depth;
      text = emit_graph_json(g, provenance.str());
    } else if (gen_format == "dot") {
      text = emit_dot(g);
    } else {
      text = emit_svg_circle(g, !gen_chords);
    }
    write_output(gen_out, text);
  });

  // paths ---------------------------------------------------------------
  int paths_depth = 4;
  int paths_count = -1;
  std::string paths_out;
  auto* paths_cmd = app.add_subcommand(
      "paths",
      "Emit the canonical root-to-root rows of a full graph as a path list");
  paths_cmd->add_option("--depth", paths_depth, "build depth (default 4)")
      ->check(CLI::Range(0, 16));
  paths_cmd
      ->add_option("--count", paths_count,
                   "number of rows (default: the depth)")
      ->check(CLI::Range(0, 16));
  paths_cmd->add_option("--out", paths_out, "output file (default stdout)");
  paths_cmd->callback([&]() {
    Graph g = build_farey(paths_depth);
    int count = paths_count < 0 ? paths_depth : paths_count;
    std::vector<Path> rows =
        canonical_paths(g, VertexId{0}, VertexId{1}, count);
    write_output(paths_out, emit_path_list_json(g, rows));
  });

  // grainline -----------------------------------------------------------
  auto* grain = app.add_subcommand(
      "grainline", "Extract, validate, or restrict grain-line prefixes");
  grain->require_subcommand(1);

  std::string gx_graph, gx_paths, gx_out, gx_residual_out;
  int gx_rounds = 2;
  auto* extract_cmd = grain->add_subcommand(
      "extract", "Distil a grain-line prefix from a path list");
  extract_cmd->add_option("--graph", gx_graph, "graph JSON file")->required();
  extract_cmd->add_option("--paths", gx_paths, "path-list JSON file")
      ->required();
  extract_cmd->add_option("--rounds", gx_rounds, "selection rounds (>= 1)")
      ->check(CLI::Range(1, 1024));
  extract_cmd->add_option("--out", gx_out, "prefix output file");
  extract_cmd->add_option("--residual-out", gx_residual_out,
                          "write unused paths as a path list");
  extract_cmd->callback([&]() {
    Graph g = parse_graph_json(read_file(gx_graph));
    std::vector<Path> supply = parse_path_list_json(g, read_file(gx_paths));
    ExtractResult result = extract(supply, gx_rounds);
    std::cerr << "kept " << result.prefix.paths.size() << " paths, line of "
              << result.prefix.order.size() << " vertices, residual "
              << result.residual.size() << "\n";
    write_output(gx_out, emit_prefix_json(g, result.prefix));
    if (!gx_residual_out.empty()) {
      write_output(gx_residual_out, emit_path_list_json(g, result.residual));
    }
  });

  std::string gv_graph, gv_prefix;
  auto* validate_cmd = grain->add_subcommand(
      "validate", "Check the six prefix conditions inside a graph");
  validate_cmd->add_option("--graph", gv_graph, "graph JSON file")->required();
  validate_cmd->add_option("--prefix", gv_prefix, "prefix JSON file")
      ->required();
  validate_cmd->callback([&]() {
    Graph g = parse_graph_json(read_file(gv_graph));
    GrainLinePrefix p = parse_prefix_json(g, read_file(gv_prefix));
    PrefixReport report = validate_prefix(p, &g);
    std::cout << (report.pass() ? "valid: " : "invalid: ")
              << report.summary() << "\n";
    std::cout << "note: " << report.note << "\n";
    if (!report.pass()) exit_code = 1;
  });

  std::string gr_graph, gr_prefix, gr_lo, gr_hi, gr_out;
  auto* restrict_cmd = grain->add_subcommand(
      "restrict", "Restrict a prefix between two of its line vertices");
  restrict_cmd->add_option("--graph", gr_graph, "graph JSON file")->required();
  restrict_cmd->add_option("--prefix", gr_prefix, "prefix JSON file")
      ->required();
  restrict_cmd->add_option("--lo", gr_lo, "lower line vertex token")
      ->required();
  restrict_cmd->add_option("--hi", gr_hi, "upper line vertex token")
      ->required();
  restrict_cmd->add_option("--out", gr_out, "output file (default stdout)");
  restrict_cmd->callback([&]() {
    Graph g = parse_graph_json(read_file(gr_graph));
    GrainLinePrefix p = parse_prefix_json(g, read_file(gr_prefix));
    VertexId lo = parse_vertex_token(g, gr_lo);
    VertexId hi = parse_vertex_token(g, gr_hi);
    GrainLinePrefix cut = restrict_to(p, lo, hi);
    write_output(gr_out, emit_prefix_json(g, cut));
  });

  // split ---------------------------------------------------------------
  std::string sp_graph, sp_u = "0/1", sp_v = "1/0", sp_supply, sp_out;
  int sp_k = 4;
  auto* split_cmd = app.add_subcommand(
      "split", "Run one splitting step across an edge of a graph");
  split_cmd->add_option("--graph", sp_graph, "graph JSON file")->required();
  split_cmd->add_option("--u", sp_u, "first endpoint token (default 0/1)");
  split_cmd->add_option("--v", sp_v, "second endpoint token (default 1/0)");
  split_cmd->add_option("--k", sp_k, "path budget (>= 3, default 4)")
      ->check(CLI::Range(3, 64));
  split_cmd
      ->add_option("--supply", sp_supply,
                   "canonical | flow (default: canonical when both "
                   "endpoints are labelled, flow otherwise)")
      ->check(CLI::IsMember({"canonical", "flow"}));
  split_cmd->add_option("--out", sp_out, "output file (default stdout)");
  split_cmd->callback([&]() {
    Graph g = parse_graph_json(read_file(sp_graph));
    VertexId u = parse_vertex_token(g, sp_u);
    VertexId v = parse_vertex_token(g, sp_v);
    std::string choice = sp_supply;
    if (choice.empty()) {
      choice = g.has_label(u) && g.has_label(v) ? "canonical" : "flow";
    }
    std::unique_ptr<PathSupply> supply;
    if (choice == "canonical") {
      supply = std::make_unique<CanonicalFareySupply>();
    } else {
      supply = std::make_unique<FlowPathSupply>();
    }
    SplitResult result = split_step(g, u, v, *supply, sp_k);
    write_output(sp_out, emit_split_json(g, result));
  });

  // foresight -----------------------------------------------------------
  int fs_depth = 2;
  int fs_host_depth = 6;
  int fs_k = 5;
  std::string fs_out;
  auto* foresight_cmd = app.add_subcommand(
      "foresight",
      "Iterate the splitting step on a full graph and report each stage");
  foresight_cmd
      ->add_option("--depth", fs_depth, "number of levels (default 2)")
      ->check(CLI::Range(0, 8));
  foresight_cmd
      ->add_option("--host-depth", fs_host_depth,
                   "depth of the starting full graph (default 6)")
      ->check(CLI::Range(0, 16));
  foresight_cmd
      ->add_option("--k", fs_k, "level-0 path budget (>= 3, default 5)")
      ->check(CLI::Range(3, 16));
  foresight_cmd->add_option("--out", fs_out,
                            "write the final core as graph JSON");
  foresight_cmd->callback([&]() {
    Graph host = build_farey(fs_host_depth);
    CanonicalFareySupply supply;
    PipelineResult result = foresighted_pipeline(host, VertexId{0},
                                                 VertexId{1}, supply,
                                                 fs_depth, fs_k);
    for (std::size_t i = 0; i < result.stages.size(); ++i) {
      const PipelineStage& stage = result.stages[i];
      std::size_t blue = 0;
      for (const auto& [e, c] : stage.farey_part.colours()) {
        if (c == EdgeColour::blue) blue += 1;
      }
      std::cout << "stage " << i << ": graph " << stage.graph.vertex_count()
                << " vertices / " << stage.graph.edge_count()
                << " edges; core " << stage.farey_part.vertex_count()
                << " vertices / " << blue << " blue edges\n";
    }
    std::cout << "contracted interiors: " << result.contractions.size();
    const char* sep = " (sizes ";
    for (const auto& [ve, x] : result.contractions) {
      std::cout << sep << x.size();
      sep = ", ";
    }
    if (!result.contractions.empty()) std::cout << ")";
    std::cout << "\n";
    if (!fs_out.empty()) {
      std::ostringstream provenance;
      provenance << "fareygraph foresight --depth " << fs_depth
                 << " --host-depth " << fs_host_depth << " --k " << fs_k;
      write_output(fs_out, emit_graph_json(result.stages.back().farey_part,
                                           provenance.str()));
    }
  });

  // check ---------------------------------------------------------------
  std::string check_suite = "all";
  auto* check_cmd = app.add_subcommand(
      "check", "Run a self-check suite and print one line per criterion");
  check_cmd
      ->add_option("--suite", check_suite,
                   "counts | equivalence | grainline | minor | pipeline | "
                   "all (default all)")
      ->check(CLI::IsMember({"counts", "equivalence", "grainline", "minor",
                             "pipeline", "all"}));
  check_cmd->callback([&]() {
    std::vector<CriterionResult> results;
    if (check_suite == "counts") {
      results = run_counts_suite();
    } else if (check_suite == "equivalence") {
      results = run_equivalence_suite();
    } else if (check_suite == "grainline") {
      results = run_grainline_suite();
    } else if (check_suite == "minor") {
      results = run_minor_suite();
    } else if (check_suite == "pipeline") {
      results = run_pipeline_suite();
    } else {
      results = run_all_suites();
    }
    exit_code = print_criteria(results);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 2;
  } catch (const farey::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const farey::SupplyError& e) {
    std::cerr << "supply error: " << e.what() << "\n";
    return 3;
  } catch (const farey::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const farey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
