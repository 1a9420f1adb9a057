#include "normgraph/subgroup.hpp"

#include <algorithm>

namespace normgraph {

namespace {

constexpr std::size_t kIndexThreshold = 32;
constexpr std::uint32_t kDenseMarksLimit = 1u << 16;

}  // namespace

SubgroupSet::SubgroupSet() : elements_{kIdentity} {}

SubgroupSet SubgroupSet::from_elements(std::vector<ElementId> elements,
                                       std::vector<ElementId> generators) {
  SubgroupSet s;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != kIdentity)
    throw GroupError("subgroup element list must contain the identity");
  s.elements_ = std::move(elements);
  s.generators_ = std::move(generators);
  if (s.elements_.size() > kIndexThreshold)
    s.index_.insert(s.elements_.begin(), s.elements_.end());
  return s;
}

bool SubgroupSet::contains(ElementId g) const {
  if (elements_.size() > kIndexThreshold) return index_.contains(g);
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SubgroupSet::is_subset_of(const SubgroupSet& other) const {
  if (order() > other.order()) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](ElementId g) { return other.contains(g); });
}

ElementMarks::ElementMarks(std::uint32_t ambient_order) : dense_(ambient_order <= kDenseMarksLimit) {
  if (dense_) bytes_.assign(ambient_order, 0);
}

ClosureBuilder::ClosureBuilder(const FiniteGroup& group)
    : group_(group), marks_(group.order()), elements_{kIdentity} {
  marks_.set(kIdentity);
}

void ClosureBuilder::add(ElementId g) {
  if (exceeded_ || marks_.test(g)) return;
  // Dimino: the new subgroup is a union of right cosets of the old one.
  const std::vector<ElementId> previous = elements_;
  generators_.push_back(g);
  std::vector<ElementId> reps{kIdentity};
  auto add_coset = [&](ElementId rep) {
    if (elements_.size() + previous.size() > limit_) {
      exceeded_ = true;
      return false;
    }
    reps.push_back(rep);
    for (ElementId c : previous) {
      const ElementId e = group_.multiply(c, rep);
      marks_.set(e);
      elements_.push_back(e);
    }
    return true;
  };
  if (!add_coset(g)) return;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (ElementId s : generators_) {
      const ElementId e = group_.multiply(reps[i], s);
      if (!marks_.test(e) && !add_coset(e)) return;
    }
  }
}

SubgroupSet ClosureBuilder::result() const {
  return SubgroupSet::from_elements(elements_, generators_);
}

SubgroupSet closure(const FiniteGroup& group, std::span<const ElementId> generators) {
  ClosureBuilder b(group);
  b.add_all(generators);
  return b.result();
}

SubgroupSet join(const FiniteGroup& group, const SubgroupSet& base,
                 std::span<const ElementId> extra) {
  ClosureBuilder b(group);
  if (!base.generators().empty())
    b.add_all(base.generators());
  else
    b.add_all(base.elements());
  b.add_all(extra);
  return b.result();
}

std::optional<SubgroupSet> bounded_closure(const FiniteGroup& group, std::span<const ElementId> generators,
                                           std::uint32_t limit) {
  ClosureBuilder b(group);
  b.set_limit(limit);
  b.add_all(generators);
  if (b.exceeded()) return std::nullopt;
  return b.result();
}

std::vector<ElementId> generating_set(const FiniteGroup& group, const SubgroupSet& subgroup) {
  ClosureBuilder b(group);
  for (ElementId g : subgroup.elements()) {
    b.add(g);
    if (b.order() == subgroup.order()) break;
  }
  return b.generators();
}

}  // namespace normgraph
