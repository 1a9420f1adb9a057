#pragma once

// Slow, definition-level reference computations. Nothing here uses the
// cyclic-subgroup collapse or symmetry reduction; it exists to cross-check
// the fast paths on small groups.

#include <cstdint>
#include <vector>

#include "normgraph/graph.hpp"
#include "normgraph/group.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph::oracle {

/// Adjacency of two distinct non-identity elements straight from the
/// definitions: products compared as sets for the permuting graph, explicit
/// commutator subgroups for the Engel graph, a derived series for the soluble
/// graph.
bool element_adjacent(GraphKind kind, const FiniteGroup& group, ElementId x, ElementId y);

/// Element-level graph on G# (index = ElementId; the identity row is empty).
struct ElementGraph {
  std::vector<std::vector<ElementId>> adjacency;
};

ElementGraph build_element_graph(GraphKind kind, const FiniteGroup& group);

/// BFS distances on the element graph; kUnreachable when no path.
std::vector<std::int32_t> element_distances(const ElementGraph& graph, ElementId source);

/// Every normal subgroup, found by closing the normal closures of single
/// elements under joins. Sorted by element list.
std::vector<SubgroupSet> all_normal_subgroups(const FiniteGroup& group);

/// Inclusion-minimal nontrivial members of all_normal_subgroups.
std::vector<SubgroupSet> minimal_normal_subgroups_brute_force(const FiniteGroup& group);

/// Largest nilpotent member of all_normal_subgroups.
SubgroupSet fitting_subgroup_brute_force(const FiniteGroup& group);

/// Every subgroup generated by at most two elements.
std::vector<SubgroupSet> two_generated_subgroups(const FiniteGroup& group);

}  // namespace normgraph::oracle
