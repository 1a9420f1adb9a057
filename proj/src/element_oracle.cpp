#include "normgraph/element_oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "normgraph/group_core.hpp"

namespace normgraph::oracle {

namespace {

std::set<ElementId> product_set(const FiniteGroup& group, const SubgroupSet& a, const SubgroupSet& b) {
  std::set<ElementId> out;
  for (ElementId x : a.elements())
    for (ElementId y : b.elements()) out.insert(group.multiply(x, y));
  return out;
}

// [B, A; n] = 1 for some n >= 1, stopping at the first repeated subgroup.
bool engel_reaches_identity(const FiniteGroup& group, const SubgroupSet& a, const SubgroupSet& b) {
  std::vector<SubgroupSet> seen{b};
  SubgroupSet x = b;
  while (true) {
    x = subgroup_commutator(group, x, a);
    if (x.is_trivial()) return true;
    if (std::find(seen.begin(), seen.end(), x) != seen.end()) return false;
    seen.push_back(x);
  }
}

}  // namespace

bool element_adjacent(GraphKind kind, const FiniteGroup& group, ElementId x, ElementId y) {
  switch (kind) {
    case GraphKind::commuting:
      return group.multiply(x, y) == group.multiply(y, x);
    case GraphKind::normalising: {
      const SubgroupSet a = cyclic_subgroup(group, x), b = cyclic_subgroup(group, y);
      bool a_norm_b = true, b_norm_a = true;
      for (ElementId u : b.elements()) a_norm_b = a_norm_b && b.contains(group.conjugate(u, x));
      for (ElementId u : a.elements()) b_norm_a = b_norm_a && a.contains(group.conjugate(u, y));
      return a_norm_b || b_norm_a;
    }
    case GraphKind::permuting: {
      const SubgroupSet a = cyclic_subgroup(group, x), b = cyclic_subgroup(group, y);
      return product_set(group, a, b) == product_set(group, b, a);
    }
    case GraphKind::engel: {
      const SubgroupSet a = cyclic_subgroup(group, x), b = cyclic_subgroup(group, y);
      return engel_reaches_identity(group, a, b) || engel_reaches_identity(group, b, a);
    }
    case GraphKind::soluble: {
      const ElementId gens[] = {x, y};
      return is_soluble(group, closure(group, gens));
    }
  }
  return false;
}

ElementGraph build_element_graph(GraphKind kind, const FiniteGroup& group) {
  ElementGraph g;
  g.adjacency.resize(group.order());
  for (ElementId x = 1; x < group.order(); ++x)
    for (ElementId y = x + 1; y < group.order(); ++y)
      if (element_adjacent(kind, group, x, y)) {
        g.adjacency[x].push_back(y);
        g.adjacency[y].push_back(x);
      }
  return g;
}

std::vector<std::int32_t> element_distances(const ElementGraph& graph, ElementId source) {
  std::vector<std::int32_t> dist(graph.adjacency.size(), kUnreachable);
  std::deque<ElementId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const ElementId u = queue.front();
    queue.pop_front();
    for (ElementId v : graph.adjacency[u])
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::vector<SubgroupSet> all_normal_subgroups(const FiniteGroup& group) {
  std::set<std::vector<ElementId>> found;
  std::vector<SubgroupSet> pending;
  auto add = [&](SubgroupSet s) {
    if (found.insert(s.elements()).second) pending.push_back(std::move(s));
  };
  std::vector<SubgroupSet> atoms;
  for (ElementId g = 0; g < group.order(); ++g) {
    // normal closure straight from the definition: all conjugates of g
    std::vector<ElementId> conj;
    for (ElementId h = 0; h < group.order(); ++h) conj.push_back(group.conjugate(g, h));
    SubgroupSet s = closure(group, conj);
    if (std::find(atoms.begin(), atoms.end(), s) == atoms.end()) atoms.push_back(s);
    add(std::move(s));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const SubgroupSet current = pending[i];
    for (const auto& atom : atoms) add(join(group, current, atom.elements()));
  }
  std::vector<SubgroupSet> out(pending.begin(), pending.end());
  std::sort(out.begin(), out.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return a.elements() < b.elements(); });
  return out;
}

std::vector<SubgroupSet> minimal_normal_subgroups_brute_force(const FiniteGroup& group) {
  const auto all = all_normal_subgroups(group);
  std::vector<SubgroupSet> out;
  for (const auto& n : all) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : all)
      if (!m.is_trivial() && m.order() < n.order() && m.is_subset_of(n)) minimal = false;
    if (minimal) out.push_back(n);
  }
  return out;
}

SubgroupSet fitting_subgroup_brute_force(const FiniteGroup& group) {
  SubgroupSet best;
  for (const auto& n : all_normal_subgroups(group))
    if (n.order() > best.order() && is_nilpotent(group, n)) best = n;
  return best;
}

std::vector<SubgroupSet> two_generated_subgroups(const FiniteGroup& group) {
  std::set<std::vector<ElementId>> seen;
  std::vector<SubgroupSet> out;
  for (ElementId x = 0; x < group.order(); ++x)
    for (ElementId y = x; y < group.order(); ++y) {
      const ElementId gens[] = {x, y};
      SubgroupSet s = closure(group, gens);
      if (seen.insert(s.elements()).second) out.push_back(std::move(s));
    }
  return out;
}

}  // namespace normgraph::oracle
