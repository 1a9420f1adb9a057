#pragma once

#include <cstdint>
#include <vector>

#include "normgraph/group.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

std::uint32_t element_order(const FiniteGroup& group, ElementId g);

/// {g^0, ..., g^(o(g)-1)}
SubgroupSet cyclic_subgroup(const FiniteGroup& group, ElementId g);

inline ElementId conjugate(const FiniteGroup& group, ElementId g, ElementId h) {
  return group.conjugate(g, h);
}

bool is_normal(const FiniteGroup& group, const SubgroupSet& subgroup);

/// True iff a normalises the cyclic subgroup generated by `b_generator`.
bool normaliser_membership(const FiniteGroup& group, ElementId a, ElementId b_generator,
                           const SubgroupSet& b);

SubgroupSet centralizer(const FiniteGroup& group, const SubgroupSet& s);
SubgroupSet centralizer(const FiniteGroup& group, ElementId g);

/// Elements g with h^g in `subgroup` for all h in it.
SubgroupSet normaliser(const FiniteGroup& group, const SubgroupSet& subgroup);

SubgroupSet normal_closure(const FiniteGroup& group, ElementId g);

/// Normal closure of `seed` inside the subgroup generated by `ambient_generators`.
SubgroupSet normal_closure_in(const FiniteGroup& group, const SubgroupSet& seed,
                              const std::vector<ElementId>& ambient_generators);

/// [A,B], generated by all commutators [a,b] with a in A, b in B.
SubgroupSet subgroup_commutator(const FiniteGroup& group, const SubgroupSet& a,
                                const SubgroupSet& b);

/// Same subgroup computed from generators only: the normal closure of
/// {[a_i, b_j]} in <A, B>. Used when the element-pair route is too large.
SubgroupSet subgroup_commutator_by_generators(const FiniteGroup& group, const SubgroupSet& a,
                                              const SubgroupSet& b);

/// Series starting at `h` and ending where it stabilises.
std::vector<SubgroupSet> derived_series(const FiniteGroup& group, const SubgroupSet& h);
std::vector<SubgroupSet> lower_central_series(const FiniteGroup& group, const SubgroupSet& h);

bool is_soluble(const FiniteGroup& group, const SubgroupSet& h);
bool is_soluble(const FiniteGroup& group);
bool is_nilpotent(const FiniteGroup& group, const SubgroupSet& h);
bool is_nilpotent(const FiniteGroup& group);
bool is_abelian(const FiniteGroup& group, const SubgroupSet& h);

SubgroupSet whole_group(const FiniteGroup& group);

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& group);

SubgroupSet largest_normal_p_subgroup(const FiniteGroup& group, std::uint32_t p);
SubgroupSet fitting_subgroup(const FiniteGroup& group);

/// Minimal normal subgroups ordered by their element lists. Throws on the
/// trivial group.
std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& group);

/// Distinct prime divisors, ascending.
std::vector<std::uint32_t> prime_divisors(std::uint64_t n);

/// Prime factorisation as (prime, exponent) pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorise(std::uint64_t n);

bool is_prime_power(std::uint64_t n, std::uint32_t p);

}  // namespace normgraph
