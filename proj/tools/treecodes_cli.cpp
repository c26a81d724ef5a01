// Command-line front end for the treecodes library.
//
// Exit codes: 0 success, 1 computation or validity failure (details on
// stderr/stdout), 2 command-line usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treecodes/codes.hpp"
#include "treecodes/constructive.hpp"
#include "treecodes/enumeration.hpp"
#include "treecodes/errors.hpp"
#include "treecodes/graph.hpp"
#include "treecodes/io.hpp"
#include "treecodes/rational.hpp"
#include "treecodes/solvers.hpp"
#include "treecodes/verify.hpp"

namespace {

struct GlobalOptions {
  std::string format = "edgelist";
  long long node_budget = 100'000'000;
  long long seed = 0;  // reserved; every algorithm in the library is deterministic
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream out;
    out << std::cin.rdbuf();
    return out.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw treecodes::Error("cannot open input file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

treecodes::Graph load_graph(const GlobalOptions& opts, const std::string& path) {
  std::string text = read_all(path);
  if (opts.format == "graph6") return treecodes::graph6_decode(text);
  return treecodes::from_edge_list(text);
}

std::string join_csv(const treecodes::VertexSet& s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  });
  return out;
}

treecodes::VertexSet set_from_ids(const treecodes::Graph& g, const std::vector<int>& ids) {
  treecodes::VertexSet s(g.order());
  for (int v : ids) {
    if (v < 0 || v >= g.order())
      throw treecodes::DomainError("code vertex out of range: " + std::to_string(v));
    s.add(v);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    CLI::App app{"exact and constructive toolkit for identifying codes in trees"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "graph input/output format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    app.add_option("--node-budget", global.node_budget, "search-node limit for exact solving")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", global.seed,
                   "reserved for future randomized features; accepted and ignored because "
                   "all current algorithms are deterministic");

    int status = 0;

    // ----- solve ---------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "compute a minimum identifying code");
    solve->fallthrough();
    std::string solve_input;
    solve->add_option("input", solve_input, "graph file, or '-' for stdin")->required();
    solve->callback([&] {
      treecodes::Graph g = load_graph(global, solve_input);
      treecodes::SolveOptions opts;
      opts.node_budget = global.node_budget;
      treecodes::SolveResult res = treecodes::min_identifying_code(g, opts);
      std::cout << "n=" << g.order() << " gamma_id=" << res.optimum
                << " nodes=" << res.nodes_explored
                << " status=" << (res.budget_exceeded ? "upper_bound" : "optimal") << "\n"
                << "code=" << join_csv(res.witness.code) << "\n";
      if (res.budget_exceeded) {
        std::cerr << "node budget exhausted; the reported code is only an upper bound\n";
        status = 1;
      }
    });

    // ----- dominate ------------------------------------------------------
    auto* dominate = app.add_subcommand("dominate", "compute a minimum dominating set of a tree");
    dominate->fallthrough();
    std::string dominate_input;
    dominate->add_option("input", dominate_input, "graph file, or '-' for stdin")->required();
    dominate->callback([&] {
      treecodes::Graph g = load_graph(global, dominate_input);
      treecodes::DominationResult res = treecodes::min_dominating_set_tree(g);
      std::cout << "n=" << g.order() << " gamma=" << res.size << "\n"
                << "set=" << join_csv(res.witness) << "\n";
    });

    // ----- check ---------------------------------------------------------
    auto* check = app.add_subcommand("check", "certify a candidate identifying code");
    check->fallthrough();
    std::string check_input;
    std::vector<int> check_ids;
    check->add_option("input", check_input, "graph file, or '-' for stdin")->required();
    check->add_option("--code", check_ids, "comma-separated vertex ids")
        ->required()
        ->delimiter(',');
    check->callback([&] {
      treecodes::Graph g = load_graph(global, check_input);
      treecodes::CodeCertificate cert = treecodes::certify(g, set_from_ids(g, check_ids));
      std::cout << "valid=" << (cert.valid ? "true" : "false")
                << " dominating=" << (cert.dominating ? "true" : "false")
                << " separating=" << (cert.separating ? "true" : "false")
                << " size=" << cert.size << "\n";
      if (!cert.valid) {
        if (cert.conflict.first >= 0)
          std::cout << "conflict=" << cert.conflict.first << "," << cert.conflict.second << "\n";
        status = 1;
      }
    });

    // ----- construct -----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a code meeting a proven size bound");
    construct->fallthrough();
    std::string construct_input;
    std::string construct_bound;
    construct->add_option("input", construct_input, "graph file, or '-' for stdin")->required();
    construct
        ->add_option("--bound", construct_bound,
                     "'main' for the maximum-degree bound (D-1)n/D, "
                     "'domination' for the n - gamma bound")
        ->required()
        ->check(CLI::IsMember({"main", "domination"}));
    construct->callback([&] {
      treecodes::Graph g = load_graph(global, construct_input);
      treecodes::CodeCertificate cert;
      std::string bound_text;
      if (construct_bound == "main") {
        cert = treecodes::construct_main_bound_code(g);
        int max_degree = 0;
        for (int v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
        if (max_degree >= 3) {
          treecodes::Rational target(static_cast<long long>(max_degree - 1) * g.order(),
                                     max_degree);
          // Exceptional trees sit exactly 1/D above the generic ceiling.
          if (!treecodes::classify_exceptional(g).empty())
            target = target + treecodes::Rational(1, max_degree);
          bound_text = target.to_string();
        } else {
          bound_text = std::to_string(cert.size);  // paths/stars of degree <= 2: exact optimum
        }
      } else {
        cert = treecodes::construct_domination_bound_code(g);
        bound_text = std::to_string(g.order() - treecodes::min_dominating_set_tree(g).size);
      }
      std::cout << "n=" << g.order() << " size=" << cert.size << " bound=" << bound_text << "\n"
                << "code=" << join_csv(cert.code) << "\n";
    });

    // ----- family --------------------------------------------------------
    auto* family = app.add_subcommand("family", "generate a named tree family instance");
    family->fallthrough();
    std::string family_kind;
    std::vector<long long> family_params;
    bool family_with_code = false;
    family
        ->add_option("kind", family_kind,
                     "star | double_star | two_corona | graph_z | big_construction | "
                     "complete_ary | exceptional | appended_star")
        ->required();
    family->add_option("params", family_params, "integer parameters for the family");
    family->add_flag("--with-code", family_with_code, "also print the reference code");
    family->callback([&] {
      treecodes::FamilyInstance inst = treecodes::generate_family(family_kind, family_params);
      if (global.format == "graph6") {
        std::cout << treecodes::graph6_encode(inst.graph) << "\n";
        if (family_with_code) std::cout << "code=" << join_csv(inst.reference_code) << "\n";
      } else {
        std::cout << "# " << inst.name << "\n" << treecodes::to_edge_list(inst.graph);
        if (family_with_code) std::cout << "# code=" << join_csv(inst.reference_code) << "\n";
      }
    });

    // ----- enumerate -----------------------------------------------------
    auto* enumerate = app.add_subcommand("enumerate", "stream every free tree of a given order");
    enumerate->fallthrough();
    int enum_n = 0;
    int enum_max_degree = 0;
    bool enum_count_only = false;
    enumerate->add_option("--n", enum_n, "number of vertices")->required()->check(CLI::Range(1, 20));
    enumerate->add_option("--max-degree", enum_max_degree, "keep only trees with this maximum degree or less (0 = no filter)")
        ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--count-only", enum_count_only, "print only the number of trees");
    enumerate->callback([&] {
      treecodes::TreeStream stream(enum_n, enum_max_degree);
      long long count = 0;
      while (std::optional<treecodes::Graph> t = stream.next()) {
        ++count;
        if (enum_count_only) continue;
        if (global.format == "graph6")
          std::cout << treecodes::graph6_encode(*t) << "\n";
        else
          std::cout << treecodes::to_edge_list(*t) << "\n";  // blank line between blocks
      }
      if (enum_count_only) std::cout << count << "\n";
    });

    // ----- verify --------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "exhaustively check a bound over all trees in an order range");
    verify->fallthrough();
    std::string verify_theorem;
    int verify_n_min = -1;
    int verify_n_max = 12;
    int verify_workers = 4;
    std::string verify_out;
    verify->add_option("--theorem", verify_theorem, "'main' or 'domination'")
        ->required()
        ->check(CLI::IsMember({"main", "domination"}));
    verify->add_option("--n-min", verify_n_min, "smallest order (default: 4 for main, 3 for domination)");
    verify->add_option("--n-max", verify_n_max, "largest order")->capture_default_str();
    verify->add_option("--workers", verify_workers, "worker threads")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    verify->add_option("--out", verify_out, "write the full report to this file");
    verify->callback([&] {
      if (verify_n_min < 0) verify_n_min = (verify_theorem == "main") ? 4 : 3;
      treecodes::VerifyResult res =
          (verify_theorem == "main")
              ? treecodes::verify_main_theorem(verify_n_min, verify_n_max, verify_workers)
              : treecodes::verify_domination_theorem(verify_n_min, verify_n_max, verify_workers);
      std::string text = treecodes::format_report(res);
      if (!verify_out.empty()) {
        treecodes::write_report(verify_out, res);
        // Keep stdout short: print only the trailing summary line.
        std::size_t pos = text.rfind("summary ");
        std::cout << (pos == std::string::npos ? text : text.substr(pos));
      } else {
        std::cout << text;
      }
      if (!res.summary.ok) status = 1;
    });

    // ----- export-dot ----------------------------------------------------
    auto* dot = app.add_subcommand("export-dot", "emit Graphviz DOT, optionally highlighting a code");
    dot->fallthrough();
    std::string dot_input;
    std::vector<int> dot_ids;
    dot->add_option("input", dot_input, "graph file, or '-' for stdin")->required();
    dot->add_option("--code", dot_ids, "comma-separated vertex ids to highlight")->delimiter(',');
    dot->callback([&] {
      treecodes::Graph g = load_graph(global, dot_input);
      std::optional<treecodes::VertexSet> code;
      if (!dot_ids.empty() || dot->count("--code") > 0) code = set_from_ids(g, dot_ids);
      std::cout << treecodes::to_dot(g, code);
    });

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
