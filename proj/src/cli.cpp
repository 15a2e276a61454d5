#include "mbqc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbqc/decompose.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/matrix.hpp"
#include "mbqc/pattern.hpp"
#include "mbqc/simulate.hpp"

namespace mbqc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw std::runtime_error("cannot write file: " + path);
  }
}

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", value);
  return buf;
}

std::string bracket_list(const std::vector<std::size_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

Matrix load_single_qubit_unitary(const std::string& path, double tol) {
  Matrix u = matrix_from_json(read_file(path));
  if (u.dim() != 2) {
    throw std::runtime_error("expected a 2x2 matrix in " + path);
  }
  if (!is_unitary(u, tol)) {
    throw std::runtime_error("matrix in " + path + " is not unitary");
  }
  return u;
}

struct DecomposeArgs {
  std::string matrix_path;
  std::string kind = "zx";
  double tol = 1e-9;
};

int run_decompose(const DecomposeArgs& args, std::ostream& out) {
  Matrix u = load_single_qubit_unitary(args.matrix_path, args.tol);
  out << "kind: " << args.kind << "\n";
  auto angles = [&](Angle alpha, Angle beta, Angle gamma, Angle delta) {
    out << "alpha: " << alpha.to_string() << "\n";
    out << "beta: " << beta.to_string() << "\n";
    out << "gamma: " << gamma.to_string() << "\n";
    out << "delta: " << delta.to_string() << "\n";
  };
  if (args.kind == "zx") {
    ZXDecomposition d = zx_decompose(u);
    angles(d.alpha, d.beta, d.gamma, d.delta);
    out << "residual: " << sci((zx_reconstruct(d) - u).frobenius_norm())
        << "\n";
  } else if (args.kind == "j") {
    JDecomposition d = j_decompose(u);
    angles(d.alpha, d.beta, d.gamma, d.delta);
    out << "residual: " << sci((j_reconstruct(d) - u).frobenius_norm())
        << "\n";
  } else {
    JDecomposition d = j_decompose(u);
    angles(d.alpha, d.beta, d.gamma, d.delta);
    GateWord word = controlled_u_decompose(u);
    out << "word: " << word_to_json(word) << "\n";
    Matrix residual = evaluate_word(word) - controlled_matrix(u);
    out << "residual: " << sci(residual.frobenius_norm()) << "\n";
  }
  return 0;
}

struct CompileArgs {
  std::string circuit_path;
  std::string cu_path;
  std::string output_path;
};

int run_compile(const CompileArgs& args, std::ostream& out) {
  Pattern p;
  if (!args.circuit_path.empty()) {
    GateWord word = word_from_json(read_file(args.circuit_path));
    p = compile_circuit(word);
  } else {
    Matrix u = load_single_qubit_unitary(args.cu_path, 1e-9);
    p = controlled_u_pattern(u);
  }
  std::string text = serialize_pattern(p);
  if (args.output_path.empty()) {
    out << text;
  } else {
    write_file(args.output_path, text);
  }
  return 0;
}

struct VerifyArgs {
  std::string pattern_path;
  std::string target_path;
  std::string branches = "all";
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

int run_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  Pattern p = parse_pattern(read_file(args.pattern_path));
  ValidationReport validation = validate(p);
  if (!validation.ok()) {
    for (const ValidationIssue& issue : validation.issues) {
      err << "invalid pattern";
      if (issue.command_index >= 0) {
        err << " (command " << issue.command_index << ")";
      }
      err << ": " << issue.message << "\n";
    }
    return 2;
  }
  Matrix target = matrix_from_json(read_file(args.target_path));
  if (p.inputs.size() != p.outputs.size()) {
    err << "pattern has " << p.inputs.size() << " inputs but "
        << p.outputs.size() << " outputs\n";
    return 2;
  }
  if (target.dim() != (std::size_t{1} << p.inputs.size())) {
    err << "target dimension " << target.dim() << " does not match "
        << p.inputs.size() << " input qubits\n";
    return 2;
  }

  VerifyOptions options;
  options.seed = args.seed;
  options.tol = args.tol;
  if (args.branches == "all") {
    options.strategy = VerifyOptions::Strategy::AllBranches;
  } else if (args.branches.rfind("random:", 0) == 0) {
    options.strategy = VerifyOptions::Strategy::Random;
    std::size_t n = 0;
    try {
      n = std::stoul(args.branches.substr(7));
    } catch (const std::exception&) {
      throw std::runtime_error("bad sample count in --branches");
    }
    if (n == 0) {
      throw std::runtime_error("--branches random:N needs N >= 1");
    }
    options.samples = n;
  } else {
    throw std::runtime_error(
        "--branches must be 'all' or 'random:N', got '" + args.branches + "'");
  }

  VerificationReport report = verify_pattern(p, options);
  double distance = gp_distance(report.implemented, target);
  bool pass = report.deterministic && distance <= args.tol;

  out << "pattern: " << (p.name.empty() ? "(unnamed)" : p.name) << "\n";
  out << "qubits: " << p.qubits.size() << "\n";
  out << "measured: " << report.measured_count << "\n";
  out << "strategy: " << (options.strategy == VerifyOptions::Strategy::AllBranches
                              ? "all"
                              : "random") << "\n";
  out << "branches: " << report.branches_checked << "\n";
  out << "deterministic: " << (report.deterministic ? "true" : "false")
      << "\n";
  out << "strict: " << (report.strict_deterministic ? "true" : "false")
      << "\n";
  out << "uniform: " << (report.uniform ? "true" : "false") << "\n";
  out << "max branch deviation: " << sci(report.max_branch_deviation) << "\n";
  out << "max norm deviation: " << sci(report.max_norm_deviation) << "\n";
  out << "distance: " << sci(distance) << "\n";
  out << "verdict: " << (pass ? "pass" : "fail") << "\n";
  return pass ? 0 : 1;
}

struct GraphArgs {
  std::string pattern_path;
  std::string check;
  bool export_edges = false;
};

int run_graph(const GraphArgs& args, std::ostream& out) {
  Pattern p = parse_pattern(read_file(args.pattern_path));
  EntanglementGraph g = build_graph(p);

  if (args.export_edges) {
    out << export_edge_list(g);
    return 0;
  }

  auto print_two_colouring = [&]() {
    TwoColouring colouring = two_colour(g);
    out << "bipartite: " << (colouring.bipartite() ? "true" : "false") << "\n";
    if (colouring.bipartite()) {
      out << "colouring:";
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        out << " " << g.vertices[v] << "=" << (*colouring.colours)[v];
      }
      out << "\n";
    } else {
      out << "odd cycle:";
      for (std::size_t v : colouring.odd_cycle) out << " " << g.vertices[v];
      out << "\n";
    }
  };
  auto print_evenness = [&]() {
    EvennessReport report = evenness(g);
    out << "even: " << (report.even ? "true" : "false") << "\n";
    for (const ComponentDiagnosis& diag : report.components) {
      if (!diag.bipartite) {
        out << "odd cycle:";
        for (std::size_t v : diag.odd_cycle) out << " " << g.vertices[v];
        out << (diag.has_boundary ? "\n" : " (no boundary)\n");
      } else if (diag.has_boundary && !diag.boundary_monochromatic) {
        out << "odd path:";
        for (std::size_t v : diag.odd_path) out << " " << g.vertices[v];
        out << "\n";
      }
    }
  };

  if (args.check.empty()) {
    std::size_t boundary = 0;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (g.boundary(v)) ++boundary;
    }
    out << "vertices: " << g.vertices.size() << "\n";
    out << "edges: " << g.edges.size() << "\n";
    out << "boundary: " << boundary << "\n";
    print_two_colouring();
    print_evenness();
    out << "fundamental cycles: " << bracket_list(cycle_lengths(g)) << "\n";
  } else if (args.check == "even") {
    print_evenness();
  } else if (args.check == "bipartite") {
    print_two_colouring();
  } else if (args.check == "cycles") {
    out << "fundamental cycles: " << bracket_list(cycle_lengths(g)) << "\n";
  } else {
    out << "extreme paths: " << bracket_list(extreme_path_lengths(g)) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"measurement patterns over the {J(angle), CZ} generators"};
  app.name("mbqc");
  app.require_subcommand(1);

  DecomposeArgs decompose_args;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "split a 2x2 unitary into J angles or a controlled-U word");
  decompose->add_option("--matrix", decompose_args.matrix_path,
                        "matrix JSON file")->required();
  decompose->add_option("--kind", decompose_args.kind, "zx, j or cu")
      ->check(CLI::IsMember({"zx", "j", "cu"}));
  decompose->add_option("--tol", decompose_args.tol, "unitarity tolerance");

  CompileArgs compile_args;
  CLI::App* compile = app.add_subcommand(
      "compile", "compile a circuit or controlled-U into a pattern");
  CLI::Option* circuit_opt = compile->add_option(
      "--circuit", compile_args.circuit_path, "gate word JSON file");
  CLI::Option* cu_opt = compile->add_option(
      "--cu", compile_args.cu_path, "2x2 matrix JSON file for controlled-U");
  circuit_opt->excludes(cu_opt);
  compile->add_option("-o,--output", compile_args.output_path,
                      "write the pattern here instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "check a pattern against a target unitary");
  verify->add_option("--pattern", verify_args.pattern_path, "pattern file")
      ->required();
  verify->add_option("--target", verify_args.target_path,
                     "target matrix JSON file")->required();
  verify->add_option("--branches", verify_args.branches,
                     "'all' or 'random:N'");
  verify->add_option("--seed", verify_args.seed, "sampling seed");
  verify->add_option("--tol", verify_args.tol, "acceptance tolerance");

  GraphArgs graph_args;
  CLI::App* graph = app.add_subcommand(
      "graph", "inspect a pattern's entanglement graph");
  graph->add_option("--pattern", graph_args.pattern_path, "pattern file")
      ->required();
  graph->add_option("--check", graph_args.check,
                    "even, bipartite, cycles or paths")
      ->check(CLI::IsMember({"even", "bipartite", "cycles", "paths"}));
  graph->add_flag("--export", graph_args.export_edges,
                  "print the edge list instead of a summary");

  std::vector<const char*> argv;
  argv.push_back("mbqc");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (decompose->parsed()) return run_decompose(decompose_args, out);
    if (compile->parsed()) {
      if (compile_args.circuit_path.empty() && compile_args.cu_path.empty()) {
        err << "error: compile needs --circuit or --cu\n";
        return 2;
      }
      return run_compile(compile_args, out);
    }
    if (verify->parsed()) return run_verify(verify_args, out, err);
    if (graph->parsed()) return run_graph(graph_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace mbqc
