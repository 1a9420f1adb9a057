#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "normgraph/group.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

/// Id of a nontrivial cyclic subgroup inside a CyclicSubgroupTable.
using CyclicId = std::uint32_t;
inline constexpr CyclicId kNoCyclic = ~CyclicId{0};

/// The nontrivial cyclic subgroups of a group. Ids are assigned in increasing
/// order of the canonical (minimal) generator.
class CyclicSubgroupTable {
 public:
  /// Throws GroupError for the trivial group.
  explicit CyclicSubgroupTable(const FiniteGroup& group);

  const FiniteGroup& group() const { return group_; }
  std::uint32_t count() const { return static_cast<std::uint32_t>(canonical_.size()); }

  ElementId canonical_generator(CyclicId id) const { return canonical_[id]; }
  std::uint32_t order(CyclicId id) const { return elem_offsets_[id + 1] - elem_offsets_[id]; }

  std::span<const ElementId> generators(CyclicId id) const {
    return {gen_flat_.data() + gen_offsets_[id], gen_offsets_[id + 1] - gen_offsets_[id]};
  }
  /// Sorted, including the identity.
  std::span<const ElementId> elements(CyclicId id) const {
    return {elem_flat_.data() + elem_offsets_[id], elem_offsets_[id + 1] - elem_offsets_[id]};
  }

  /// Id of <g>; kNoCyclic for the identity.
  CyclicId id_of(ElementId g) const { return member_[g]; }
  bool contains(CyclicId id, ElementId g) const;

  /// Id of <a^g> for a the canonical generator of `id`.
  CyclicId conjugate_id(CyclicId id, ElementId g) const {
    return member_[group_.conjugate(canonical_[id], g)];
  }

  /// True iff `a` normalises the subgroup `id`.
  bool normalised_by(CyclicId id, ElementId a) const { return conjugate_id(id, a) == id; }

  SubgroupSet subgroup(CyclicId id) const;

 private:
  FiniteGroup group_;
  std::vector<CyclicId> member_;
  std::vector<ElementId> canonical_;
  std::vector<std::uint32_t> gen_offsets_{0}, elem_offsets_{0};
  std::vector<ElementId> gen_flat_, elem_flat_;
};

/// Orbits of G acting on cyclic-subgroup ids by conjugation.
struct OrbitDecomposition {
  std::vector<std::uint32_t> orbit_of;      // per id
  std::vector<CyclicId> representatives;    // smallest id of each orbit
  std::vector<ElementId> transversal;       // rep(orbit_of[id])^transversal[id] = id

  std::uint32_t orbit_count() const { return static_cast<std::uint32_t>(representatives.size()); }
  std::uint32_t orbit_size(std::uint32_t orbit) const;
};

OrbitDecomposition orbits(const CyclicSubgroupTable& table);

/// Conjugation action restricted to the normaliser of one representative.
struct RepresentativeSymmetry {
  CyclicId representative = 0;
  std::uint32_t stabiliser_order = 0;
  std::vector<ElementId> stabiliser_generators;
};

/// Orbits of a subgroup (given by generators) on cyclic-subgroup ids.
struct Suborbits {
  std::vector<std::uint32_t> label;   // per id
  std::vector<CyclicId> representatives;
};

/// Everything the graph builder needs to exploit inner automorphisms.
class SymmetryData {
 public:
  explicit SymmetryData(const CyclicSubgroupTable& table);

  const CyclicSubgroupTable& table() const { return *table_; }
  const OrbitDecomposition& orbits() const { return orbits_; }
  /// One entry per orbit, same order as orbits().representatives.
  const std::vector<RepresentativeSymmetry>& representatives() const { return reps_; }

  Suborbits suborbits(std::uint32_t orbit) const;

 private:
  const CyclicSubgroupTable* table_;
  OrbitDecomposition orbits_;
  std::vector<RepresentativeSymmetry> reps_;
};

/// Stabiliser of `orbits.representatives[orbit]` from Schreier generators.
RepresentativeSymmetry representative_stabiliser(const CyclicSubgroupTable& table,
                                                 const OrbitDecomposition& orbits,
                                                 std::uint32_t orbit);

Suborbits compute_suborbits(const CyclicSubgroupTable& table, std::span<const ElementId> generators);

}  // namespace normgraph
