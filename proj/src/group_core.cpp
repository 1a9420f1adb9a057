#include "normgraph/group_core.hpp"

#include <algorithm>
#include <map>

namespace normgraph {

namespace {

// Above this many commutator pairs the generator route is used instead.
constexpr std::uint64_t kPairRouteLimit = 1u << 22;

const std::vector<ElementId>& gens_or_elements(const SubgroupSet& h) {
  return h.generators().empty() ? h.elements() : h.generators();
}

SubgroupSet commutator_auto(const FiniteGroup& group, const SubgroupSet& a, const SubgroupSet& b) {
  if (static_cast<std::uint64_t>(a.order()) * b.order() <= kPairRouteLimit)
    return subgroup_commutator(group, a, b);
  return subgroup_commutator_by_generators(group, a, b);
}

}  // namespace

std::uint32_t element_order(const FiniteGroup& group, ElementId g) {
  std::uint32_t m = 1;
  for (ElementId x = g; x != kIdentity; x = group.multiply(x, g)) ++m;
  return m;
}

SubgroupSet cyclic_subgroup(const FiniteGroup& group, ElementId g) {
  std::vector<ElementId> powers{kIdentity};
  for (ElementId x = g; x != kIdentity; x = group.multiply(x, g)) powers.push_back(x);
  std::vector<ElementId> gens;
  if (g != kIdentity) gens.push_back(g);
  return SubgroupSet::from_elements(std::move(powers), std::move(gens));
}

bool is_normal(const FiniteGroup& group, const SubgroupSet& subgroup) {
  const auto& hs = gens_or_elements(subgroup);
  for (ElementId s : group.generators())
    for (ElementId h : hs)
      if (!subgroup.contains(group.conjugate(h, s))) return false;
  return true;
}

bool normaliser_membership(const FiniteGroup& group, ElementId a, ElementId b_generator,
                           const SubgroupSet& b) {
  return b.contains(group.conjugate(b_generator, a));
}

SubgroupSet centralizer(const FiniteGroup& group, const SubgroupSet& s) {
  const auto& ss = gens_or_elements(s);
  std::vector<ElementId> out;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (ElementId x : ss) {
      if (group.multiply(g, x) != group.multiply(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return SubgroupSet::from_elements(std::move(out));
}

SubgroupSet centralizer(const FiniteGroup& group, ElementId g) {
  return centralizer(group, cyclic_subgroup(group, g));
}

SubgroupSet normaliser(const FiniteGroup& group, const SubgroupSet& subgroup) {
  const auto& hs = gens_or_elements(subgroup);
  std::vector<ElementId> out;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool ok = true;
    for (ElementId h : hs) {
      if (!subgroup.contains(group.conjugate(h, g))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return SubgroupSet::from_elements(std::move(out));
}

SubgroupSet normal_closure_in(const FiniteGroup& group, const SubgroupSet& seed,
                              const std::vector<ElementId>& ambient_generators) {
  ClosureBuilder b(group);
  b.add_all(gens_or_elements(seed));
  // generators() grows while we iterate; every generator gets conjugated.
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const ElementId x = b.generators()[i];
    for (ElementId s : ambient_generators) b.add(group.conjugate(x, s));
  }
  return b.result();
}

SubgroupSet normal_closure(const FiniteGroup& group, ElementId g) {
  return normal_closure_in(group, cyclic_subgroup(group, g), group.generators());
}

SubgroupSet subgroup_commutator(const FiniteGroup& group, const SubgroupSet& a,
                                const SubgroupSet& b) {
  ClosureBuilder builder(group);
  for (ElementId x : a.elements())
    for (ElementId y : b.elements()) builder.add(group.commutator(x, y));
  return builder.result();
}

SubgroupSet subgroup_commutator_by_generators(const FiniteGroup& group, const SubgroupSet& a,
                                              const SubgroupSet& b) {
  const std::vector<ElementId> ga = a.generators().empty() ? generating_set(group, a) : a.generators();
  const std::vector<ElementId> gb = b.generators().empty() ? generating_set(group, b) : b.generators();
  std::vector<ElementId> seeds;
  for (ElementId x : ga)
    for (ElementId y : gb) seeds.push_back(group.commutator(x, y));
  std::vector<ElementId> ambient = ga;
  ambient.insert(ambient.end(), gb.begin(), gb.end());
  return normal_closure_in(group, closure(group, seeds), ambient);
}

std::vector<SubgroupSet> derived_series(const FiniteGroup& group, const SubgroupSet& h) {
  std::vector<SubgroupSet> series{h};
  while (!series.back().is_trivial()) {
    SubgroupSet next = commutator_auto(group, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubgroupSet> lower_central_series(const FiniteGroup& group, const SubgroupSet& h) {
  std::vector<SubgroupSet> series{h};
  while (!series.back().is_trivial()) {
    SubgroupSet next = commutator_auto(group, series.back(), h);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_soluble(const FiniteGroup& group, const SubgroupSet& h) {
  return derived_series(group, h).back().is_trivial();
}

bool is_nilpotent(const FiniteGroup& group, const SubgroupSet& h) {
  return lower_central_series(group, h).back().is_trivial();
}

SubgroupSet whole_group(const FiniteGroup& group) {
  std::vector<ElementId> all(group.order());
  for (ElementId g = 0; g < group.order(); ++g) all[g] = g;
  return SubgroupSet::from_elements(std::move(all), group.generators());
}

bool is_soluble(const FiniteGroup& group) { return is_soluble(group, whole_group(group)); }
bool is_nilpotent(const FiniteGroup& group) { return is_nilpotent(group, whole_group(group)); }

bool is_abelian(const FiniteGroup& group, const SubgroupSet& h) {
  const auto& hs = gens_or_elements(h);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j)
      if (group.multiply(hs[i], hs[j]) != group.multiply(hs[j], hs[i])) return false;
  return true;
}

std::vector<std::vector<ElementId>> conjugacy_classes(const FiniteGroup& group) {
  constexpr std::uint32_t kUnseen = ~0u;
  std::vector<std::uint32_t> class_of(group.order(), kUnseen);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId g = 0; g < group.order(); ++g) {
    if (class_of[g] != kUnseen) continue;
    const auto id = static_cast<std::uint32_t>(classes.size());
    std::vector<ElementId> cls{g};
    class_of[g] = id;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId s : group.generators()) {
        const ElementId y = group.conjugate(cls[i], s);
        if (class_of[y] == kUnseen) {
          class_of[y] = id;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorise(std::uint64_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(static_cast<std::uint32_t>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<std::uint32_t>(n), 1);
  return out;
}

std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (auto [p, e] : factorise(n)) out.push_back(p);
  return out;
}

bool is_prime_power(std::uint64_t n, std::uint32_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

SubgroupSet largest_normal_p_subgroup(const FiniteGroup& group, std::uint32_t p) {
  if (group.order() % p != 0) return SubgroupSet{};
  ClosureBuilder op(group);
  for (const auto& cls : conjugacy_classes(group)) {
    const ElementId x = cls.front();
    if (x == kIdentity || op.contains(x)) continue;
    if (!is_prime_power(element_order(group, x), p)) continue;
    const SubgroupSet nc = normal_closure(group, x);
    if (is_prime_power(nc.order(), p)) op.add_all(nc.generators());
  }
  return op.result();
}

SubgroupSet fitting_subgroup(const FiniteGroup& group) {
  ClosureBuilder f(group);
  for (std::uint32_t p : prime_divisors(group.order())) {
    const SubgroupSet op = largest_normal_p_subgroup(group, p);
    f.add_all(op.generators());
  }
  return f.result();
}

std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& group) {
  if (group.order() == 1) throw GroupError("the trivial group has no minimal normal subgroups");
  std::vector<SubgroupSet> candidates;
  for (const auto& cls : conjugacy_classes(group)) {
    const ElementId x = cls.front();
    if (x == kIdentity) continue;
    const std::uint32_t o = element_order(group, x);
    if (prime_divisors(o).size() != 1 || factorise(o).front().second != 1) continue;
    SubgroupSet nc = normal_closure(group, x);
    if (std::find(candidates.begin(), candidates.end(), nc) == candidates.end())
      candidates.push_back(std::move(nc));
  }
  std::vector<SubgroupSet> minimal;
  for (const auto& c : candidates) {
    const bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const SubgroupSet& d) {
      return d.order() < c.order() && d.is_subset_of(c);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    return a.elements() < b.elements();
  });
  return minimal;
}

}  // namespace normgraph
