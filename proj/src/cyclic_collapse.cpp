#include "normgraph/cyclic_collapse.hpp"

#include <algorithm>
#include <numeric>

namespace normgraph {

CyclicSubgroupTable::CyclicSubgroupTable(const FiniteGroup& group)
    : group_(group), member_(group.order(), kNoCyclic) {
  if (group.order() < 2) throw GroupError("the trivial group has no nontrivial cyclic subgroups");
  std::vector<ElementId> powers;
  for (ElementId g = 1; g < group.order(); ++g) {
    if (member_[g] != kNoCyclic) continue;
    // g is the smallest generator of <g>: all generators are assigned together.
    const auto id = static_cast<CyclicId>(canonical_.size());
    powers.assign(1, kIdentity);
    for (ElementId x = g; x != kIdentity; x = group.multiply(x, g)) powers.push_back(x);
    const auto o = static_cast<std::uint32_t>(powers.size());
    for (std::uint32_t k = 1; k < o; ++k) {
      if (std::gcd(k, o) != 1) continue;
      member_[powers[k]] = id;
      gen_flat_.push_back(powers[k]);
    }
    std::sort(gen_flat_.begin() + gen_offsets_.back(), gen_flat_.end());
    gen_offsets_.push_back(static_cast<std::uint32_t>(gen_flat_.size()));
    std::sort(powers.begin(), powers.end());
    elem_flat_.insert(elem_flat_.end(), powers.begin(), powers.end());
    elem_offsets_.push_back(static_cast<std::uint32_t>(elem_flat_.size()));
    canonical_.push_back(g);
  }
}

bool CyclicSubgroupTable::contains(CyclicId id, ElementId g) const {
  auto els = elements(id);
  return std::binary_search(els.begin(), els.end(), g);
}

SubgroupSet CyclicSubgroupTable::subgroup(CyclicId id) const {
  auto els = elements(id);
  return SubgroupSet::from_elements({els.begin(), els.end()}, {canonical_[id]});
}

std::uint32_t OrbitDecomposition::orbit_size(std::uint32_t orbit) const {
  return static_cast<std::uint32_t>(std::count(orbit_of.begin(), orbit_of.end(), orbit));
}

OrbitDecomposition orbits(const CyclicSubgroupTable& table) {
  constexpr std::uint32_t kUnseen = ~0u;
  const FiniteGroup& g = table.group();
  OrbitDecomposition out;
  out.orbit_of.assign(table.count(), kUnseen);
  out.transversal.assign(table.count(), kIdentity);
  std::vector<CyclicId> queue;
  for (CyclicId start = 0; start < table.count(); ++start) {
    if (out.orbit_of[start] != kUnseen) continue;
    const auto label = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(start);
    out.orbit_of[start] = label;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const CyclicId cur = queue[i];
      for (ElementId s : g.generators()) {
        const CyclicId next = table.conjugate_id(cur, s);
        if (out.orbit_of[next] != kUnseen) continue;
        out.orbit_of[next] = label;
        out.transversal[next] = g.multiply(out.transversal[cur], s);
        queue.push_back(next);
      }
    }
  }
  return out;
}

RepresentativeSymmetry representative_stabiliser(const CyclicSubgroupTable& table,
                                                 const OrbitDecomposition& orbits,
                                                 std::uint32_t orbit) {
  const FiniteGroup& g = table.group();
  RepresentativeSymmetry rs;
  rs.representative = orbits.representatives[orbit];
  std::vector<CyclicId> members;
  for (CyclicId id = 0; id < table.count(); ++id)
    if (orbits.orbit_of[id] == orbit) members.push_back(id);
  const std::uint32_t target = g.order() / static_cast<std::uint32_t>(members.size());

  // Schreier generators t_B s t_{B^s}^-1 generate the stabiliser.
  ClosureBuilder stab(g);
  for (CyclicId b : members) {
    if (stab.order() == target) break;
    const ElementId tb = orbits.transversal[b];
    for (ElementId s : g.generators()) {
      const CyclicId c = table.conjugate_id(b, s);
      stab.add(g.multiply(g.multiply(tb, s), g.invert(orbits.transversal[c])));
      if (stab.order() == target) break;
    }
  }
  if (stab.order() != target) throw GroupError("stabiliser order disagrees with orbit length");
  rs.stabiliser_order = stab.order();
  rs.stabiliser_generators = stab.generators();
  return rs;
}

Suborbits compute_suborbits(const CyclicSubgroupTable& table, std::span<const ElementId> generators) {
  constexpr std::uint32_t kUnseen = ~0u;
  Suborbits out;
  out.label.assign(table.count(), kUnseen);
  std::vector<CyclicId> queue;
  for (CyclicId start = 0; start < table.count(); ++start) {
    if (out.label[start] != kUnseen) continue;
    const auto label = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(start);
    out.label[start] = label;
    queue.assign(1, start);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (ElementId s : generators) {
        const CyclicId next = table.conjugate_id(queue[i], s);
        if (out.label[next] != kUnseen) continue;
        out.label[next] = label;
        queue.push_back(next);
      }
    }
  }
  return out;
}

SymmetryData::SymmetryData(const CyclicSubgroupTable& table)
    : table_(&table), orbits_(normgraph::orbits(table)) {
  for (std::uint32_t o = 0; o < orbits_.orbit_count(); ++o)
    reps_.push_back(representative_stabiliser(table, orbits_, o));
}

Suborbits SymmetryData::suborbits(std::uint32_t orbit) const {
  return compute_suborbits(*table_, reps_[orbit].stabiliser_generators);
}

}  // namespace normgraph
