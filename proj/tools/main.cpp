#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "symbreak/automorphisms.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph_io.hpp"
#include "symbreak/products.hpp"
#include "symbreak/skeleton.hpp"
#include "symbreak/verify.hpp"

using namespace symbreak;

namespace {

Graph load_graph(const std::string& path, const std::string& format) {
  if (format == "edgelist") return read_graph_file(path, GraphFormat::edgelist);
  if (format == "graph6") return read_graph_file(path, GraphFormat::graph6);
  return read_graph_file_auto(path);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot open output file: " + out_path);
  out << text;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::budget_exceeded:
    case errc::enumeration_cap_exceeded:
    case errc::size_cap_exceeded:
      return 3;
    default:
      return 2;
  }
}

FormulaResult eval_formula(const std::string& name, const std::vector<int64_t>& args,
                           const SearchBudget& budget) {
  auto need = [&](size_t n) {
    if (args.size() != n)
      fail(errc::domain_error, name + " expects " + std::to_string(n) + " parameters");
  };
  if (name == "kron-complete") {
    need(2);
    return d_kron_complete(args[0], args[1]);
  }
  if (name == "complete-multipartite") {
    if (args.empty() || args.size() % 2 != 0)
      fail(errc::domain_error, "complete-multipartite expects pairs: a1 j1 [a2 j2 ...]");
    std::vector<std::pair<int64_t, int64_t>> parts;
    for (size_t i = 0; i < args.size(); i += 2) parts.emplace_back(args[i], args[i + 1]);
    return d_complete_multipartite(MultipartiteSpec{parts});
  }
  if (name == "kron-complete-bipartite") {
    need(4);
    return d_kron_complete_bipartite(args[0], args[1], args[2], args[3]);
  }
  if (name == "kron-stars") {
    need(2);
    return d_kron_stars(args[0], args[1]);
  }
  if (name == "dprime-k2-power") {
    need(1);
    return dprime_k2_power(args[0]);
  }
  if (name == "dprime-kron-paths") {
    need(2);
    return dprime_kron_paths(args[0], args[1]);
  }
  if (name == "dprime-kron-path-star") {
    need(2);
    return dprime_kron_path_star(args[0], args[1]);
  }
  if (name == "dprime-kron-stars") {
    need(2);
    return dprime_kron_stars(args[0], args[1]);
  }
  if (name == "dprime-bipartite-upper") {
    need(2);
    return dprime_bipartite_upper(args[0], args[1]);
  }
  if (name == "dprime-kron-upper") {
    need(2);
    return dprime_kron_upper(args[0], args[1], budget);
  }
  fail(errc::domain_error, "unknown formula: " + name);
}

std::string render_labels(const std::vector<int>& labels) {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels[i]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph symmetry-breaking toolkit: distinguishing numbers and indices, Kronecker and "
               "Cartesian products, Cartesian skeletons, closed-form evaluators, verification "
               "suites"};
  app.require_subcommand(1);

  std::string format = "auto";
  std::string out_path;
  app.add_option("--format", format, "input graph format: auto, edgelist, graph6")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

  auto* product_cmd = app.add_subcommand("product", "Kronecker or Cartesian product of two graphs");
  std::string kind = "kron";
  std::string file_a, file_b, out_format = "edgelist";
  product_cmd->add_option("--kind", kind, "kron or cart")->check(CLI::IsMember({"kron", "cart"}));
  product_cmd->add_option("a", file_a, "first factor graph file")->required();
  product_cmd->add_option("b", file_b, "second factor graph file")->required();
  product_cmd->add_option("--out", out_path, "output file (default stdout)");
  product_cmd->add_option("--output-format", out_format, "edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group order and generators");
  std::string aut_file;
  aut_cmd->add_option("g", aut_file, "graph file")->required();

  auto* dnum_cmd = app.add_subcommand("dnum", "distinguishing number with certificate");
  auto* dindex_cmd = app.add_subcommand("dindex", "distinguishing index with certificate");
  std::string dnum_file, dindex_file;
  uint64_t budget_nodes = 0;
  int budget_items = 0;
  dnum_cmd->add_option("g", dnum_file, "graph file")->required();
  dindex_cmd->add_option("g", dindex_file, "graph file")->required();
  for (auto* cmd : {dnum_cmd, dindex_cmd}) {
    cmd->add_option("--budget", budget_nodes, "search node cap (default 10^7)");
    cmd->add_option("--max-items", budget_items,
                    "max vertices/edges for exhaustive refutation (default 12)");
  }

  auto* skel_cmd = app.add_subcommand("skeleton", "Cartesian skeleton of a graph");
  std::string skel_file;
  skel_cmd->add_option("g", skel_file, "graph file")->required();
  skel_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* fam_cmd = app.add_subcommand("families", "closed-form distinguishing values");
  std::string formula;
  std::vector<int64_t> fam_args;
  fam_cmd->add_option("formula", formula,
                      "kron-complete | complete-multipartite | kron-complete-bipartite | kron-stars "
                      "| dprime-k2-power | dprime-kron-paths | dprime-kron-path-star | "
                      "dprime-kron-stars | dprime-bipartite-upper | dprime-kron-upper")
      ->required();
  fam_cmd->add_option("params", fam_args, "integer parameters");

  auto* verify_cmd =
      app.add_subcommand("verify", "run verification suites, emit a JSON-lines report");
  std::string suite = "all", report_path;
  uint64_t seed = 42;
  uint64_t verify_budget = 0;
  bool timings = false;
  bool list_suites = false;
  verify_cmd->add_option("--suite", suite, "suite id or 'all'");
  verify_cmd->add_option("--seed", seed, "fixture seed (default 42)");
  verify_cmd->add_option("--budget", verify_budget, "search node cap");
  verify_cmd->add_option("--report", report_path, "report file (default stdout)");
  verify_cmd->add_flag("--timings", timings, "record wall-clock per case (breaks byte stability)");
  verify_cmd->add_flag("--list", list_suites, "list suite ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors are 2
  }

  try {
    if (product_cmd->parsed()) {
      Graph a = load_graph(file_a, format);
      Graph g = load_graph(file_b, format);
      Graph p = kind == "kron" ? kronecker(a, g) : cartesian(a, g);
      GraphFormat fmt = out_format == "graph6" ? GraphFormat::graph6 : GraphFormat::edgelist;
      std::string text = serialize_graph(p, fmt);
      if (fmt == GraphFormat::graph6) text += '\n';
      write_output(text, out_path);
      return 0;
    }
    if (aut_cmd->parsed()) {
      Graph g = load_graph(aut_file, format);
      AutOptions opts = default_aut_options();
      opts.vertex_cap = std::max(opts.vertex_cap, g.vertex_count());
      AutomorphismGroup aut = automorphism_group(g, opts);
      std::cout << "order " << aut.order << '\n';
      std::cout << "enumerated " << (aut.enumerated ? "true" : "false") << '\n';
      std::cout << "generators " << aut.generators.size() << '\n';
      for (const auto& gen : aut.generators) std::cout << render_labels(gen.image()) << '\n';
      return 0;
    }
    if (dnum_cmd->parsed() || dindex_cmd->parsed()) {
      bool is_index = dindex_cmd->parsed();
      Graph g = load_graph(is_index ? dindex_file : dnum_file, format);
      SearchBudget budget = default_budget();
      if (budget_nodes > 0) budget.max_labelings_enumerated = budget_nodes;
      if (budget_items > 0) budget.max_vertices = budget_items;
      DistinguishingResult r =
          is_index ? distinguishing_index(g, budget) : distinguishing_number(g, budget);
      std::cout << (is_index ? "distinguishing_index " : "distinguishing_number ") << r.value
                << '\n';
      std::cout << "exact " << (r.exhaustive_lower_bound_proof ? "true" : "false") << '\n';
      std::cout << "certificate " << render_labels(r.certificate) << '\n';
      if (is_index) {
        auto edges = g.edges();
        for (size_t e = 0; e < edges.size(); ++e)
          std::cout << "edge " << edges[e].first << ' ' << edges[e].second << " label "
                    << r.certificate[e] << '\n';
      }
      return 0;
    }
    if (skel_cmd->parsed()) {
      Graph g = load_graph(skel_file, format);
      write_output(serialize_graph(cartesian_skeleton(g), GraphFormat::edgelist), out_path);
      return 0;
    }
    if (fam_cmd->parsed()) {
      FormulaResult r = eval_formula(formula, fam_args, default_budget());
      std::cout << r.to_string();
      if (r.fallback) std::cout << " (fallback bound)";
      std::cout << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (list_suites) {
        for (const auto& id : suite_ids()) std::cout << id << '\n';
        return 0;
      }
      SuiteOptions options;
      options.seed = seed;
      options.timings = timings;
      if (verify_budget > 0) options.budget.max_labelings_enumerated = verify_budget;
      auto lines = run_suite(suite, options);
      write_output(emit_report(lines), report_path);
      int pass = 0, failed = 0, skipped = 0;
      for (const auto& line : lines) {
        if (line.status == SuiteReportLine::Status::pass)
          ++pass;
        else if (line.status == SuiteReportLine::Status::fail)
          ++failed;
        else
          ++skipped;
      }
      std::cerr << "verify: " << pass << " pass, " << failed << " fail, " << skipped
                << " skipped-budget\n";
      return report_exit_code(lines);
    }
  } catch (const Error& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 2;
}
