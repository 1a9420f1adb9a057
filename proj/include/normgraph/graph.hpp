#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "normgraph/cyclic_collapse.hpp"

namespace normgraph {

enum class GraphKind { commuting, normalising, permuting, engel, soluble };

inline constexpr GraphKind kAllGraphKinds[] = {GraphKind::commuting, GraphKind::normalising,
                                               GraphKind::permuting, GraphKind::engel,
                                               GraphKind::soluble};

std::string to_string(GraphKind k);
/// Throws std::invalid_argument for unknown tags.
GraphKind parse_graph_kind(const std::string& tag);

/// Adjacency of the cyclic subgroups `a` and `b` (a != b) in the graph of the
/// given kind. Every element-level relation depends only on <x> and <y>.
bool adjacent(GraphKind kind, const CyclicSubgroupTable& table, CyclicId a, CyclicId b);

/// Engel relation: iterating X_{n+1} = [X_n, A] from X_0 = B reaches 1 before
/// repeating, for (A,B) or (B,A).
bool engel_adjacent(const CyclicSubgroupTable& table, CyclicId a, CyclicId b);
bool permutes(const CyclicSubgroupTable& table, CyclicId a, CyclicId b);

/// Quotient graph on nontrivial cyclic subgroups in CSR form. Neighbour lists
/// are sorted and symmetric, without self-loops.
struct CollapsedGraph {
  GraphKind kind = GraphKind::normalising;
  std::uint32_t vertex_count = 0;
  std::vector<std::uint64_t> offsets{0};
  std::vector<std::uint32_t> neighbors;

  std::uint64_t edge_count() const { return neighbors.size() / 2; }
  std::span<const std::uint32_t> neighbours(std::uint32_t v) const {
    return {neighbors.data() + offsets[v], static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
  }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  unsigned threads = 1;
  /// Upper bound on stored directed edges (neighbour entries).
  std::uint64_t max_neighbor_entries = std::uint64_t{1} << 30;
  /// When set, completed representative rows are persisted here and reused.
  std::string checkpoint_path;
  /// Called after each representative row with (done, total).
  std::function<void(std::uint32_t, std::uint32_t)> progress;
};

/// Builds the graph by computing adjacency only for one representative per
/// orbit of the normaliser of each orbit representative, then transporting
/// rows along conjugation. Results do not depend on the thread count.
CollapsedGraph build_collapsed_graph(GraphKind kind, const SymmetryData& symmetry,
                                     const BuildOptions& options = {});

/// Plain all-pairs construction (quadratic); for cross-checking small groups.
CollapsedGraph build_collapsed_graph_exhaustive(GraphKind kind, const CyclicSubgroupTable& table);

/// Neighbour rows of the orbit representatives only (row i belongs to
/// symmetry.orbits().representatives[i]).
std::vector<std::vector<CyclicId>> representative_rows(GraphKind kind, const SymmetryData& symmetry,
                                                       const BuildOptions& options = {});

std::vector<std::vector<std::uint32_t>> connected_components(const CollapsedGraph& graph);

inline constexpr std::int32_t kUnreachable = -1;

struct DistanceResult {
  std::uint32_t source = 0;
  std::vector<std::int32_t> distance;  // kUnreachable where no path exists
  std::vector<std::uint32_t> parent;   // BFS tree; parent[source] = source
};

DistanceResult bfs(const CollapsedGraph& graph, std::uint32_t source);
/// Multi-source BFS; distance to the nearest source.
std::vector<std::int32_t> bfs_from_set(const CollapsedGraph& graph, std::span<const std::uint32_t> sources);

struct Eccentricity {
  std::uint32_t value = 0;     // max finite distance
  bool all_reachable = true;
};

Eccentricity eccentricity(const CollapsedGraph& graph, std::uint32_t source);

/// Max finite distance from each source, 64 sources per bit-parallel sweep.
std::vector<std::uint32_t> eccentricities(const CollapsedGraph& graph, std::span<const std::uint32_t> sources);

std::vector<std::uint32_t> shortest_path(const CollapsedGraph& graph, std::uint32_t from, std::uint32_t to);

struct DiameterResult {
  bool connected = true;
  std::uint32_t component_count = 1;
  /// Element-level diameter (valid when connected).
  std::uint32_t diameter = 0;
  /// Diameter of the quotient graph itself.
  std::uint32_t collapsed_diameter = 0;
  /// Element-level diameter of each component, in connected_components order.
  std::vector<std::uint32_t> component_diameters;
  /// Collapsed vertices realising the largest eccentricity.
  std::uint32_t witness_source = 0, witness_target = 0;
};

/// Eccentricities are computed only for orbit representatives; the quotient
/// diameter equals the element-level one except that a lone cyclic subgroup
/// with two or more generators still has element diameter 1.
DiameterResult diameter(const CollapsedGraph& graph, const CyclicSubgroupTable& table,
                        const OrbitDecomposition& orbits);

/// d(x, H) = min over h in H# of d(x, h); 0 when x is in H, nullopt when no
/// element of H is reachable. Throws for trivial H or x = identity.
std::optional<std::uint32_t> distance_to_subset(const CollapsedGraph& graph, const CyclicSubgroupTable& table,
                                                ElementId x, const SubgroupSet& h);

/// Per-vertex d(<x>, H) from one multi-source sweep (kUnreachable if none).
std::vector<std::int32_t> distances_to_subset(const CollapsedGraph& graph, const CyclicSubgroupTable& table,
                                              const SubgroupSet& h);

/// "kind vertex_count edge_count" then one "i j" line per edge with i < j.
void write_edge_list(const CollapsedGraph& graph, std::ostream& out);

}  // namespace normgraph
