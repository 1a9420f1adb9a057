#pragma once

// The soluble group N ⋊ H, N = GF(5)^6, H = <t1, t2, x> of order 36, whose
// normalising and permuting graphs both have diameter exactly 6.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "normgraph/graph.hpp"
#include "normgraph/matrix.hpp"

namespace normgraph {

struct DiameterSixMatrices {
  Matrix t1, t2, x;
  /// x^3 as displayed alongside the generators.
  Matrix x_cubed;
};

const DiameterSixMatrices& diameter_six_matrices();

/// N ⋊ <t1, t2, x> from the compiled-in matrices.
FiniteGroup build_diameter_six_group();

/// The all-ones vector of N, as an element of G.
ElementId diameter_six_w(const FiniteGroup& group);

struct DiameterSixOptions {
  unsigned threads = 1;
  /// Prefix for per-graph checkpoint files (".normalising"/".permuting" appended).
  std::string checkpoint_path;
  std::function<void(const std::string&)> log;
};

struct DiameterSixResult {
  // local phase
  std::uint64_t group_order = 0;
  std::uint32_t order_t1 = 0, order_t2 = 0, order_x = 0, h_order = 0;
  std::uint32_t fixed_dim_x = 0, fixed_dim_x_cubed = 0;
  bool x_cubed_matches = false;
  std::uint32_t normaliser_order = 0;  // |N_H(<x>)|
  std::uint32_t normaliser_involutions = 0, normaliser_order_six = 0;
  std::uint64_t h_to_hw_pairs_checked = 0, h_to_hw_edges = 0;
  std::uint64_t x_to_n_pairs_checked = 0, x_to_n_edges = 0;
  bool local_done = false;

  // diameter phase
  std::uint32_t cyclic_subgroups = 0, orbits = 0;
  struct GraphSummary {
    std::uint64_t edges = 0;
    bool connected = false;
    std::uint32_t components = 0;
    std::uint32_t diameter = 0;
    std::uint32_t x_to_xw_distance = 0;  // element distance d(x, x^w)
    std::vector<std::uint32_t> path;     // realising path between x and x^w, as cyclic ids
    std::vector<std::string> path_elements;
    bool path_valid = false;             // every step re-checked with the raw oracle
  };
  std::map<GraphKind, GraphSummary> graphs;
  bool diameters_done = false;

  std::map<std::string, double> seconds;  // wall clock per phase
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  /// `with_timings` = false gives output that is identical across runs.
  nlohmann::json to_json(bool with_timings = true) const;
};

void run_local_phase(const FiniteGroup& group, DiameterSixResult& result);
/// Throws BudgetExceeded / CheckpointError from graph construction.
void run_diameter_phase(const FiniteGroup& group, DiameterSixResult& result, const DiameterSixOptions& options = {});

/// Frozen regression values (first verified run).
struct DiameterSixRegression {
  static constexpr std::uint32_t cyclic_subgroups = 142031;
  static constexpr std::uint32_t orbits = 128;
  static constexpr std::uint64_t normalising_edges = 10745215;
  static constexpr std::uint64_t permuting_edges = 19452715;
};

}  // namespace normgraph
