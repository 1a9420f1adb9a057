#include "normgraph/frobenius.hpp"

#include <algorithm>
#include <set>

#include "normgraph/group_core.hpp"

namespace normgraph {

FrobeniusStructure detect_frobenius(const FiniteGroup& group, std::uint32_t complement_search_limit) {
  if (group.order() < 2) throw FrobeniusError("the trivial group has no Frobenius structure");
  FrobeniusStructure fs;
  const SubgroupSet k = fitting_subgroup(group);
  if (k.is_trivial() || k.order() == group.order()) return fs;

  // C_G(k) <= K for k in K#; centralisers of conjugates are conjugate, so one
  // element per class suffices.
  std::vector<bool> checked(group.order(), false);
  for (ElementId x : k.elements()) {
    if (x == kIdentity || checked[x]) continue;
    for (ElementId g = 0; g < group.order(); ++g) {
      if (k.contains(g)) continue;
      if (group.multiply(g, x) == group.multiply(x, g)) return fs;
    }
    // mark the class of x
    std::vector<ElementId> cls{x};
    checked[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (ElementId s : group.generators()) {
        const ElementId y = group.conjugate(cls[i], s);
        if (!checked[y]) {
          checked[y] = true;
          cls.push_back(y);
        }
      }
  }

  fs.is_frobenius = true;
  fs.kernel = k;
  fs.kernel_primes = prime_divisors(k.order());
  fs.complement_primes = prime_divisors(group.order() / k.order());
  if (group.order() <= complement_search_limit) fs.complement = find_complement(group, k);
  return fs;
}

std::optional<SubgroupSet> find_complement(const FiniteGroup& group, const SubgroupSet& kernel) {
  const std::uint32_t target = group.order() / kernel.order();
  auto valid = [&](const SubgroupSet& c) {
    if (c.order() != target) return false;
    for (ElementId x : c.elements())
      if (x != kIdentity && kernel.contains(x)) return false;
    return true;
  };
  std::vector<ElementId> outside;
  for (ElementId g = 1; g < group.order(); ++g)
    if (!kernel.contains(g) && target % element_order(group, g) == 0) outside.push_back(g);

  for (ElementId x : outside) {
    const ElementId gens[] = {x};
    if (auto c = bounded_closure(group, gens, target); c && valid(*c)) return c;
  }
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      const ElementId gens[] = {outside[i], outside[j]};
      if (auto c = bounded_closure(group, gens, target); c && valid(*c)) return c;
    }
  return std::nullopt;
}

bool disconnection_criterion(const FrobeniusStructure& fs) {
  if (!fs.is_frobenius) throw FrobeniusError("disconnection criterion needs a Frobenius group");
  for (std::uint32_t p : fs.complement_primes)
    for (std::uint32_t r : fs.kernel_primes)
      if ((r - 1) % p == 0) return false;
  return true;
}

std::vector<std::vector<ElementId>> predicted_components(const FiniteGroup& group, const FrobeniusStructure& fs) {
  if (!fs.is_frobenius) throw FrobeniusError("predicted components need a Frobenius group");
  if (!disconnection_criterion(fs)) throw FrobeniusError("criterion predicts a connected normalising graph");
  if (!fs.complement) throw FrobeniusError("no complement found within the search budget");

  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> kernel_sharp(fs.kernel.elements().begin() + 1, fs.kernel.elements().end());
  out.push_back(std::move(kernel_sharp));
  std::set<std::vector<ElementId>> seen;
  for (ElementId k : fs.kernel.elements()) {
    std::vector<ElementId> conj;
    for (ElementId c : fs.complement->elements())
      if (c != kIdentity) conj.push_back(group.conjugate(c, k));
    std::sort(conj.begin(), conj.end());
    if (seen.insert(conj).second) out.push_back(std::move(conj));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_frobenius_complement(const FiniteGroup& group, const SubgroupSet& c) {
  if (c.is_trivial() || c.order() == group.order()) return false;
  for (ElementId g = 0; g < group.order(); ++g) {
    if (c.contains(g)) continue;
    for (ElementId x : c.elements())
      if (x != kIdentity && c.contains(group.conjugate(x, g))) return false;
  }
  return true;
}

ComplementSearchResult frobenius_by_complement_search(const FiniteGroup& group) {
  ComplementSearchResult out;
  if (group.order() < 2) return out;
  const auto classes = conjugacy_classes(group);
  std::set<std::vector<ElementId>> tried;

  auto examine = [&](const SubgroupSet& c) {
    if (!tried.insert(c.elements()).second) return false;
    ++out.candidates_examined;
    if (!is_frobenius_complement(group, c)) return false;
    // Kernel: identity plus everything outside every conjugate of C.
    std::vector<bool> covered(group.order(), false);
    for (ElementId g = 0; g < group.order(); ++g)
      for (ElementId x : c.elements())
        if (x != kIdentity) covered[group.conjugate(x, g)] = true;
    std::vector<ElementId> kernel{kIdentity};
    for (ElementId g = 1; g < group.order(); ++g)
      if (!covered[g]) kernel.push_back(g);
    // must be closed under multiplication
    std::vector<bool> in_kernel(group.order(), false);
    for (ElementId k : kernel) in_kernel[k] = true;
    for (ElementId a : kernel)
      for (ElementId b : kernel)
        if (!in_kernel[group.multiply(a, b)]) return false;
    if (kernel.size() * c.order() != group.order()) return false;
    out.is_frobenius = true;
    out.complement = c;
    out.kernel = SubgroupSet::from_elements(std::move(kernel));
    return true;
  };

  // One generator, then pairs whose first member is a class representative
  // (every 2-generated subgroup is conjugate to one of these).
  for (const auto& cls : classes) {
    if (cls.front() == kIdentity) continue;
    const ElementId gens[] = {cls.front()};
    if (examine(closure(group, gens))) return out;
  }
  for (const auto& cls : classes) {
    const ElementId x = cls.front();
    if (x == kIdentity) continue;
    for (ElementId y = 1; y < group.order(); ++y) {
      const ElementId gens[] = {x, y};
      auto c = bounded_closure(group, gens, group.order() - 1);
      if (c && examine(*c)) return out;
    }
  }
  return out;
}

}  // namespace normgraph
