// normgraph command-line entry point.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/parse
// error, 3 resource budget exceeded.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "normgraph/diameter_six.hpp"
#include "normgraph/frobenius.hpp"
#include "normgraph/group_core.hpp"
#include "normgraph/group_spec.hpp"
#include "normgraph/verifier.hpp"

using namespace normgraph;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3;

unsigned default_threads() {
  if (const char* env = std::getenv("NORMGRAPH_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::ostringstream os;
  os << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// JSON goes to stdout after the human summary, and optionally to a file.
void emit(const json& doc, const std::string& output_path) {
  std::cout << doc.dump(2) << '\n';
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    out << doc.dump(2) << '\n';
  }
}

std::string factorisation_string(std::uint64_t n) {
  std::string s;
  for (auto [p, e] : factorise(n)) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return s.empty() ? "1" : s;
}

int cmd_build_info(const std::string& spec_path, const std::string& output) {
  const FiniteGroup g = build(load_group_spec(spec_path));
  json doc{{"command", "build-info"},
           {"spec", spec_path},
           {"order", g.order()},
           {"representation", to_string(g.representation())},
           {"factorisation", factorisation_string(g.order())}};
  const bool soluble = is_soluble(g);
  doc["soluble"] = soluble;
  doc["nilpotent"] = is_nilpotent(g);
  doc["abelian"] = is_abelian(g, whole_group(g));
  doc["fitting_order"] = fitting_subgroup(g).order();
  json minimal = json::array();
  if (g.order() > 1)
    for (const auto& n : minimal_normal_subgroups(g)) minimal.push_back(n.order());
  doc["minimal_normal_orders"] = minimal;
  if (g.order() > 1) {
    const FrobeniusStructure fs = detect_frobenius(g);
    json f{{"frobenius", fs.is_frobenius}};
    if (fs.is_frobenius) {
      f["kernel_order"] = fs.kernel.order();
      f["kernel_primes"] = fs.kernel_primes;
      f["complement_primes"] = fs.complement_primes;
      f["complement_order"] = fs.complement ? json(fs.complement->order()) : json(nullptr);
      f["disconnection_criterion"] = disconnection_criterion(fs);
    }
    doc["frobenius"] = f;
  } else {
    doc["frobenius"] = json{{"frobenius", false}};
  }

  std::cout << "order " << g.order() << " = " << factorisation_string(g.order()) << '\n'
            << "soluble " << (soluble ? "yes" : "no") << ", nilpotent " << (doc["nilpotent"] ? "yes" : "no")
            << ", |F(G)| = " << doc["fitting_order"] << '\n'
            << "minimal normal subgroup orders " << minimal.dump() << '\n'
            << "Frobenius " << (doc["frobenius"]["frobenius"] ? "yes" : "no");
  if (doc["frobenius"]["frobenius"]) std::cout << ", kernel order " << doc["frobenius"]["kernel_order"];
  std::cout << '\n';
  emit(doc, output);
  return kExitPass;
}

int cmd_graph(const std::string& spec_path, const std::string& kind_tag, bool want_diameter, bool want_components,
              const std::string& export_path, unsigned threads, std::uint64_t budget, const std::string& output) {
  const GraphKind kind = parse_graph_kind(kind_tag);
  const FiniteGroup g = build(load_group_spec(spec_path));
  json doc{{"command", "graph"}, {"spec", spec_path}, {"kind", to_string(kind)}, {"order", g.order()}};
  if (g.order() < 2) {
    doc["vertices"] = 0;
    doc["edges"] = 0;
    doc["partial"] = false;
    std::cout << "trivial group: empty graph\n";
    emit(doc, output);
    return kExitPass;
  }
  const CyclicSubgroupTable table(g);
  const SymmetryData symmetry(table);
  BuildOptions bo;
  bo.threads = threads;
  if (budget) bo.max_neighbor_entries = budget;
  CollapsedGraph graph;
  try {
    graph = build_collapsed_graph(kind, symmetry, bo);
  } catch (const BudgetExceeded& e) {
    doc["partial"] = true;
    doc["error"] = e.what();
    doc["vertices"] = table.count();
    std::cout << "budget exceeded: " << e.what() << '\n';
    emit(doc, output);
    return kExitBudget;
  }
  doc["partial"] = false;
  doc["vertices"] = graph.vertex_count;
  doc["edges"] = graph.edge_count();
  std::cout << to_string(kind) << " graph: " << graph.vertex_count << " cyclic-subgroup vertices, "
            << graph.edge_count() << " edges\n";
  if (want_components) {
    const auto comps = connected_components(graph);
    doc["components"] = comps.size();
    std::cout << "components " << comps.size() << '\n';
  }
  if (want_diameter) {
    const DiameterResult d = diameter(graph, table, symmetry.orbits());
    doc["connected"] = d.connected;
    doc["diameter"] = d.connected ? json(d.diameter) : json(nullptr);
    doc["component_diameters"] = d.component_diameters;
    std::cout << "diameter " << (d.connected ? std::to_string(d.diameter) : "disconnected") << '\n';
  }
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw std::runtime_error("cannot write " + export_path);
    write_edge_list(graph, out);
    doc["export"] = export_path;
  }
  emit(doc, output);
  return kExitPass;
}

int cmd_verify(const std::string& corpus_path, const std::vector<std::string>& suite_names,
               const std::vector<std::string>& groups, unsigned threads, const std::string& output) {
  std::vector<Suite> suites;
  for (const auto& name : suite_names) {
    if (name == "all")
      suites.insert(suites.end(), std::begin(kAllSuites), std::end(kAllSuites));
    else if (!name.empty())
      suites.push_back(parse_suite(name));
  }
  if (suites.empty()) throw CLI::ValidationError("--suite", "empty suite list");

  Corpus corpus = corpus_path == "default" ? default_corpus() : load_corpus(corpus_path);
  if (!groups.empty()) {
    std::erase_if(corpus.entries, [&](const CorpusEntry& e) {
      return std::find(groups.begin(), groups.end(), e.id) == groups.end();
    });
  }
  VerifyOptions options;
  options.threads = threads;
  const auto reports = run_corpus(corpus, suites, options);

  bool all = true;
  json arr = json::array();
  std::cout << std::left << std::setw(16) << "group" << std::setw(22) << "suite" << std::setw(6) << "pass"
            << std::setw(6) << "fail" << "skip\n";
  for (const auto& r : reports) {
    int pass = 0, fail = 0, skip = 0;
    for (const auto& c : r.claims)
      (c.status == ClaimStatus::pass ? pass : c.status == ClaimStatus::fail ? fail : skip)++;
    all = all && r.passed();
    std::cout << std::setw(16) << r.group << std::setw(22) << r.suite << std::setw(6) << pass << std::setw(6) << fail
              << skip << '\n';
    arr.push_back(r.to_json());
  }
  std::cout << (all ? "ALL PASS" : "FAILURES PRESENT") << " (" << reports.size() << " reports)\n";
  emit(json{{"command", "verify"}, {"timestamp", timestamp()}, {"passed", all}, {"reports", arr}}, output);
  return all ? kExitPass : kExitFail;
}

int cmd_paper_example(const std::string& phase, unsigned threads, const std::string& checkpoint,
                      const std::string& output) {
  const FiniteGroup g = build_diameter_six_group();
  DiameterSixResult r;
  if (phase == "local" || phase == "all") run_local_phase(g, r);
  if (phase == "diameters" || phase == "all") {
    DiameterSixOptions o;
    o.threads = threads;
    o.checkpoint_path = checkpoint;
    o.log = [](const std::string& s) { std::cerr << s << std::endl; };
    try {
      run_diameter_phase(g, r, o);
    } catch (const BudgetExceeded& e) {
      r.failures.push_back(std::string("budget exceeded: ") + e.what());
      json doc = r.to_json();
      doc["command"] = "paper-example";
      doc["phase"] = phase;
      doc["partial"] = true;
      emit(doc, output);
      return kExitBudget;
    }
  }
  if (r.local_done)
    std::cout << "|G| = " << r.group_order << ", o(t1) = " << r.order_t1 << ", o(t2) = " << r.order_t2
              << ", o(x) = " << r.order_x << ", |H| = " << r.h_order << '\n'
              << "fixed space dims x: " << r.fixed_dim_x << ", x^3: " << r.fixed_dim_x_cubed
              << "; permuting edges H-H^w: " << r.h_to_hw_edges << ", <x>-N: " << r.x_to_n_edges << '\n';
  for (const auto& [kind, s] : r.graphs)
    std::cout << to_string(kind) << ": " << s.edges << " edges, diameter " << s.diameter << ", d(x, x^w) = "
              << s.x_to_xw_distance << '\n';
  for (const auto& f : r.failures) std::cout << "FAIL: " << f << '\n';
  std::cout << (r.passed() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
  json doc = r.to_json();
  doc["command"] = "paper-example";
  doc["phase"] = phase;
  doc["partial"] = false;
  emit(doc, output);
  return r.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalising, permuting and related graphs of finite soluble groups"};
  app.require_subcommand(1);
  std::string output;
  unsigned threads = default_threads();

  auto* info = app.add_subcommand("build-info", "Structure of a group given by a spec file");
  std::string info_spec;
  info->add_option("spec", info_spec, "group spec file")->required();
  info->add_option("--output", output, "also write the JSON report here");

  auto* graph = app.add_subcommand("graph", "Build one graph on a group's cyclic subgroups");
  std::string graph_spec, kind, export_path;
  bool want_diameter = false, want_components = false;
  graph->add_option("spec", graph_spec, "group spec file")->required();
  graph->add_option("--kind", kind, "commuting|normalising|permuting|engel|soluble")->required();
  graph->add_flag("--diameter", want_diameter, "report connectivity and diameter");
  graph->add_flag("--components", want_components, "report the number of components");
  graph->add_option("--export", export_path, "write the edge list here");
  graph->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  std::uint64_t budget = 0;
  graph->add_option("--max-entries", budget, "cap on stored neighbour entries (twice the edge count)")
      ->check(CLI::PositiveNumber);
  graph->add_option("--output", output, "also write the JSON report here");

  auto* verify = app.add_subcommand("verify", "Run theorem suites over a corpus");
  std::string corpus = "default";
  std::vector<std::string> suites{"all"};
  std::vector<std::string> groups;
  verify->add_option("--corpus", corpus, "corpus JSON file or 'default'");
  verify->add_option("--suite", suites, "comma-separated suite names, or 'all'")->delimiter(',');
  verify->add_option("--group", groups, "restrict to these corpus ids")->delimiter(',');
  verify->add_option("--threads", threads, "groups verified concurrently")->check(CLI::PositiveNumber);
  verify->add_option("--output", output, "also write the JSON report here");

  auto* example = app.add_subcommand("paper-example", "The 562500-element group with diameters 6");
  std::string phase = "all", checkpoint;
  example->add_option("--phase", phase, "local|diameters|all")
      ->check(CLI::IsMember({"local", "diameters", "all"}));
  example->add_option("--threads", threads, "edge enumeration threads")->check(CLI::PositiveNumber);
  example->add_option("--checkpoint", checkpoint, "checkpoint file prefix for edge enumeration");
  example->add_option("--output", output, "also write the JSON result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*info) return cmd_build_info(info_spec, output);
    if (*graph) return cmd_graph(graph_spec, kind, want_diameter, want_components, export_path, threads, budget, output);
    if (*verify) return cmd_verify(corpus, suites, groups, threads, output);
    if (*example) return cmd_paper_example(phase, threads, checkpoint, output);
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
