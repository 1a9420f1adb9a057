#include "normgraph/diameter_six.hpp"

#include <algorithm>
#include <chrono>

#include "normgraph/group_core.hpp"
#include "normgraph/representations.hpp"

namespace normgraph {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// AB = BA as sets, from sorted element lists.
bool products_commute(const FiniteGroup& g, const std::vector<ElementId>& a, const std::vector<ElementId>& b) {
  std::vector<ElementId> ab, ba;
  ab.reserve(a.size() * b.size());
  ba.reserve(a.size() * b.size());
  for (ElementId x : a)
    for (ElementId y : b) {
      ab.push_back(g.multiply(x, y));
      ba.push_back(g.multiply(y, x));
    }
  std::sort(ab.begin(), ab.end());
  std::sort(ba.begin(), ba.end());
  ab.erase(std::unique(ab.begin(), ab.end()), ab.end());
  ba.erase(std::unique(ba.begin(), ba.end()), ba.end());
  return ab == ba;
}

void fail(DiameterSixResult& r, const std::string& what) { r.failures.push_back(what); }

}  // namespace

const DiameterSixMatrices& diameter_six_matrices() {
  static const DiameterSixMatrices m{
      Matrix::from_rows(5, {{1, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0},
                            {0, 0, -1, 0, 0, 0},
                            {0, 0, 0, -1, 0, 0},
                            {0, 0, 0, 0, -1, 0},
                            {0, 0, 0, 0, 0, -1}}),
      Matrix::from_rows(5, {{-1, 0, 0, 0, 0, 0},
                            {0, -1, 0, 0, 0, 0},
                            {0, 0, -1, 0, 0, 0},
                            {0, 0, 0, -1, 0, 0},
                            {0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 1}}),
      Matrix::from_rows(5, {{0, 0, -1, 1, 0, 0},
                            {0, 0, -1, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 1},
                            {1, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0}}),
      Matrix::from_rows(5, {{-1, 1, 0, 0, 0, 0},
                            {-1, 0, 0, 0, 0, 0},
                            {0, 0, -1, 1, 0, 0},
                            {0, 0, -1, 0, 0, 0},
                            {0, 0, 0, 0, -1, 1},
                            {0, 0, 0, 0, -1, 0}}),
  };
  return m;
}

FiniteGroup build_diameter_six_group() {
  const auto& m = diameter_six_matrices();
  return semidirect_product(5, 6, {m.t1, m.t2, m.x});
}

ElementId diameter_six_w(const FiniteGroup& group) {
  const SemidirectGroup* sd = as_semidirect(group);
  if (!sd) throw GroupError("not a matrix semidirect product");
  return sd->element(Vector(sd->dim(), 1), Matrix::identity(sd->p(), sd->dim()));
}

void run_local_phase(const FiniteGroup& group, DiameterSixResult& r) {
  const auto t0 = Clock::now();
  const SemidirectGroup* sd = as_semidirect(group);
  if (!sd) throw GroupError("not a matrix semidirect product");
  const auto& m = diameter_six_matrices();
  const ElementId t1 = sd->element(Vector(6, 0), m.t1);
  const ElementId t2 = sd->element(Vector(6, 0), m.t2);
  const ElementId x = sd->element(Vector(6, 0), m.x);

  r.group_order = group.order();
  r.order_t1 = element_order(group, t1);
  r.order_t2 = element_order(group, t2);
  r.order_x = element_order(group, x);
  r.h_order = sd->h_order();
  if (r.group_order != 562500) fail(r, "group order " + std::to_string(r.group_order) + " != 562500");
  if (r.order_t1 != 2 || r.order_t2 != 2) fail(r, "t1 or t2 is not an involution");
  if (r.order_x != 9) fail(r, "o(x) = " + std::to_string(r.order_x) + " != 9");
  if (r.h_order != 36) fail(r, "|H| = " + std::to_string(r.h_order) + " != 36");
  if (matrix_order(m.x) != r.order_x) fail(r, "matrix order of x disagrees with its element order");

  const Matrix x3 = matrix_mul(matrix_mul(m.x, m.x), m.x);
  r.fixed_dim_x = static_cast<std::uint32_t>(fixed_space(m.x).size());
  r.fixed_dim_x_cubed = static_cast<std::uint32_t>(fixed_space(x3).size());
  r.x_cubed_matches = x3 == m.x_cubed;
  if (r.fixed_dim_x != 0) fail(r, "x fixes a nonzero vector");
  if (r.fixed_dim_x_cubed != 0) fail(r, "x^3 fixes a nonzero vector");
  if (!r.x_cubed_matches) fail(r, "x^3 differs from the displayed matrix:\n" + x3.to_string());

  // N_H(<x>)
  const SubgroupSet h = sd->complement_part();
  const SubgroupSet xs = cyclic_subgroup(group, x);
  r.normaliser_order = r.normaliser_involutions = r.normaliser_order_six = 0;
  for (ElementId a : h.elements()) {
    if (!xs.contains(group.conjugate(x, a))) continue;
    ++r.normaliser_order;
    const std::uint32_t o = element_order(group, a);
    r.normaliser_involutions += o == 2;
    r.normaliser_order_six += o == 6;
  }
  if (r.normaliser_involutions) fail(r, "N_H(<x>) contains an involution");
  if (r.normaliser_order_six) fail(r, "N_H(<x>) contains an element of order 6");

  // No permuting edge between H# and (H^w)#.
  const ElementId w = diameter_six_w(group);
  r.h_to_hw_pairs_checked = r.h_to_hw_edges = 0;
  std::vector<std::vector<ElementId>> hc, hwc;
  for (ElementId a : h.elements()) {
    if (a == kIdentity) continue;
    hc.push_back(cyclic_subgroup(group, a).elements());
    hwc.push_back(cyclic_subgroup(group, group.conjugate(a, w)).elements());
  }
  for (const auto& a : hc)
    for (const auto& b : hwc) {
      ++r.h_to_hw_pairs_checked;
      r.h_to_hw_edges += products_commute(group, a, b);
    }
  if (r.h_to_hw_edges) fail(r, std::to_string(r.h_to_hw_edges) + " permuting edges between H and H^w");

  // No permuting edge between <x># and N#. Adjacency depends only on the
  // cyclic subgroups, but every element pair is counted.
  r.x_to_n_pairs_checked = r.x_to_n_edges = 0;
  std::vector<std::vector<ElementId>> xpow;
  for (ElementId a : xs.elements())
    if (a != kIdentity) xpow.push_back(cyclic_subgroup(group, a).elements());
  for (std::uint32_t code = 1; code < sd->n_order(); ++code) {
    const ElementId n = sd->pack(code, 0);
    const auto ns = cyclic_subgroup(group, n).elements();
    for (const auto& a : xpow) {
      ++r.x_to_n_pairs_checked;
      r.x_to_n_edges += products_commute(group, a, ns);
    }
  }
  if (r.x_to_n_edges) fail(r, std::to_string(r.x_to_n_edges) + " permuting edges between <x> and N");

  r.local_done = true;
  r.seconds["local"] = since(t0);
}

void run_diameter_phase(const FiniteGroup& group, DiameterSixResult& r, const DiameterSixOptions& options) {
  auto log = [&](const std::string& s) {
    if (options.log) options.log(s);
  };
  auto t0 = Clock::now();
  const SemidirectGroup* sd = as_semidirect(group);
  if (!sd) throw GroupError("not a matrix semidirect product");
  const CyclicSubgroupTable table(group);
  r.cyclic_subgroups = table.count();
  r.seconds["cyclic_table"] = since(t0);
  log("cyclic subgroups: " + std::to_string(r.cyclic_subgroups));

  t0 = Clock::now();
  const SymmetryData symmetry(table);
  r.orbits = symmetry.orbits().orbit_count();
  r.seconds["orbits"] = since(t0);
  log("conjugacy orbits: " + std::to_string(r.orbits));
  if (r.cyclic_subgroups != DiameterSixRegression::cyclic_subgroups)
    fail(r, "cyclic subgroup count changed: " + std::to_string(r.cyclic_subgroups));
  if (r.orbits != DiameterSixRegression::orbits) fail(r, "orbit count changed: " + std::to_string(r.orbits));

  const ElementId x = sd->element(Vector(6, 0), diameter_six_matrices().x);
  const ElementId xw = group.conjugate(x, diameter_six_w(group));

  for (GraphKind kind : {GraphKind::normalising, GraphKind::permuting}) {
    const std::string name = to_string(kind);
    BuildOptions bo;
    bo.threads = options.threads;
    if (!options.checkpoint_path.empty()) bo.checkpoint_path = options.checkpoint_path + "." + name;
    t0 = Clock::now();
    const CollapsedGraph graph = build_collapsed_graph(kind, symmetry, bo);
    r.seconds[name + "_edges"] = since(t0);
    log(name + " edges: " + std::to_string(graph.edge_count()));

    t0 = Clock::now();
    const DiameterResult d = diameter(graph, table, symmetry.orbits());
    r.seconds[name + "_diameter"] = since(t0);
    log(name + " diameter: " + (d.connected ? std::to_string(d.diameter) : "disconnected"));

    DiameterSixResult::GraphSummary s;
    s.edges = graph.edge_count();
    s.connected = d.connected;
    s.components = d.component_count;
    s.diameter = d.diameter;
    s.path = shortest_path(graph, table.id_of(x), table.id_of(xw));
    s.x_to_xw_distance = s.path.empty() ? 0 : static_cast<std::uint32_t>(s.path.size() - 1);
    for (std::uint32_t v : s.path) s.path_elements.push_back(group.describe(table.canonical_generator(v)));
    s.path_valid = !s.path.empty() && s.path.front() == table.id_of(x) && s.path.back() == table.id_of(xw);
    for (std::size_t i = 0; s.path_valid && i + 1 < s.path.size(); ++i)
      s.path_valid = adjacent(kind, table, s.path[i], s.path[i + 1]);

    const std::uint64_t expected_edges = kind == GraphKind::normalising ? DiameterSixRegression::normalising_edges
                                                                         : DiameterSixRegression::permuting_edges;
    if (s.edges != expected_edges) fail(r, name + " edge count changed: " + std::to_string(s.edges));
    if (!s.connected) fail(r, name + " graph is disconnected");
    if (s.diameter != 6) fail(r, name + " diameter " + std::to_string(s.diameter) + " != 6");
    if (s.x_to_xw_distance != 6) fail(r, name + " d(x, x^w) = " + std::to_string(s.x_to_xw_distance) + " != 6");
    if (!s.path_valid) fail(r, name + " path from x to x^w failed re-validation");
    r.graphs[kind] = std::move(s);
  }
  if (r.graphs[GraphKind::permuting].diameter > r.graphs[GraphKind::normalising].diameter)
    fail(r, "permuting diameter exceeds normalising diameter");
  r.diameters_done = true;
}

nlohmann::json DiameterSixResult::to_json(bool with_timings) const {
  using nlohmann::json;
  json j{{"passed", passed()}, {"failures", failures}};
  if (local_done)
    j["local"] = json{{"group_order", group_order},
                      {"order_t1", order_t1},
                      {"order_t2", order_t2},
                      {"order_x", order_x},
                      {"h_order", h_order},
                      {"fixed_space_dim_x", fixed_dim_x},
                      {"fixed_space_dim_x_cubed", fixed_dim_x_cubed},
                      {"x_cubed_matches", x_cubed_matches},
                      {"normaliser_of_x_in_h_order", normaliser_order},
                      {"normaliser_involutions", normaliser_involutions},
                      {"normaliser_order_six_elements", normaliser_order_six},
                      {"h_to_hw_pairs_checked", h_to_hw_pairs_checked},
                      {"h_to_hw_permuting_edges", h_to_hw_edges},
                      {"x_to_n_pairs_checked", x_to_n_pairs_checked},
                      {"x_to_n_permuting_edges", x_to_n_edges}};
  if (diameters_done) {
    json g = json::object();
    for (const auto& [kind, s] : graphs)
      g[to_string(kind)] = json{{"edges", s.edges},
                                {"connected", s.connected},
                                {"components", s.components},
                                {"diameter", s.diameter},
                                {"x_to_xw_distance", s.x_to_xw_distance},
                                {"x_to_xw_path", s.path},
                                {"x_to_xw_path_generators", s.path_elements},
                                {"path_valid", s.path_valid}};
    j["diameters"] = json{{"cyclic_subgroups", cyclic_subgroups}, {"orbits", orbits}, {"graphs", g}};
  }
  if (with_timings) j["seconds"] = seconds;
  return j;
}

}  // namespace normgraph
