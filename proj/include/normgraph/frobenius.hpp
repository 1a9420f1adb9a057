#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "normgraph/group.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

class FrobeniusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrobeniusStructure {
  bool is_frobenius = false;
  SubgroupSet kernel;
  std::vector<std::uint32_t> kernel_primes;
  /// Primes of |G|/|K|.
  std::vector<std::uint32_t> complement_primes;
  std::optional<SubgroupSet> complement;
};

/// Kernel-first detection: K = F(G) must satisfy 1 < K < G and C_G(k) <= K
/// for every k in K#. A complement is searched for only when
/// `complement_search_limit` >= |G|.
FrobeniusStructure detect_frobenius(const FiniteGroup& group, std::uint32_t complement_search_limit = 20000);

/// Subgroup of order |G:K| meeting K trivially, among subgroups generated by
/// at most two elements outside K.
std::optional<SubgroupSet> find_complement(const FiniteGroup& group, const SubgroupSet& kernel);

/// True when every complement prime p and kernel prime r have p ∤ r - 1,
/// i.e. the normalising graph is predicted to be disconnected.
bool disconnection_criterion(const FrobeniusStructure& fs);

/// {K#} ∪ {(C^k)# : k in K}; each set sorted, ordered by smallest element.
std::vector<std::vector<ElementId>> predicted_components(const FiniteGroup& group, const FrobeniusStructure& fs);

/// Independent route: search subgroups generated by at most two elements for
/// a C with C ∩ C^g = 1 for all g outside C, and rebuild the kernel as the
/// complement of the union of the conjugates of C.
struct ComplementSearchResult {
  bool is_frobenius = false;
  std::optional<SubgroupSet> complement;
  std::optional<SubgroupSet> kernel;
  std::uint64_t candidates_examined = 0;
};

ComplementSearchResult frobenius_by_complement_search(const FiniteGroup& group);

/// C ∩ C^g = 1 for every g outside C (and 1 < C < G).
bool is_frobenius_complement(const FiniteGroup& group, const SubgroupSet& c);

}  // namespace normgraph
