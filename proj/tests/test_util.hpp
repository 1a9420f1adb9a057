#pragma once

#include <string>
#include <utility>
#include <vector>

#include "normgraph/representations.hpp"
#include "normgraph/verifier.hpp"

namespace testutil {

using namespace normgraph;

inline ElementId perm(const FiniteGroup& g, std::vector<std::vector<std::uint32_t>> cycles) {
  const PermutationGroup* pg = as_permutation(g);
  return pg->id_of(from_cycles(pg->degree(), cycles));
}

inline FiniteGroup s3() { return make_symmetric(3); }
inline FiniteGroup s4() { return make_symmetric(4); }
inline FiniteGroup a4() {
  return make_permutation_group(4, {from_cycles(4, {{1, 2, 3}}), from_cycles(4, {{1, 2}, {3, 4}})});
}
inline FiniteGroup q8() {
  return make_permutation_group(8, {from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                                    from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})});
}
inline FiniteGroup c7_c3() { return semidirect_product(7, 1, {Matrix::from_rows(7, {{2}})}); }
inline FiniteGroup c5_c4() { return semidirect_product(5, 1, {Matrix::from_rows(5, {{2}})}); }
inline FiniteGroup c7_4_c5() {
  return semidirect_product(7, 4, {Matrix::from_rows(7, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}})});
}

/// Default corpus groups up to `max_order`, built once per call.
inline std::vector<std::pair<std::string, FiniteGroup>> corpus_groups(std::uint32_t max_order) {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (const auto& e : default_corpus().entries) {
    FiniteGroup g = build(e.spec);
    if (g.order() <= max_order) out.emplace_back(e.id, std::move(g));
  }
  return out;
}

}  // namespace testutil
