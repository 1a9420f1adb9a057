#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "normgraph/group.hpp"

namespace normgraph {

/// Explicit element set of a subgroup. Elements are kept sorted; equality is
/// list equality. Carries a (not necessarily minimal) generating set when it
/// was produced by a closure.
class SubgroupSet {
 public:
  /// The trivial subgroup.
  SubgroupSet();

  /// `elements` must already form a subgroup; they are sorted here.
  static SubgroupSet from_elements(std::vector<ElementId> elements,
                                   std::vector<ElementId> generators = {});

  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(ElementId g) const;
  bool is_subset_of(const SubgroupSet& other) const;

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  std::unordered_set<ElementId> index_;  // only populated for larger subgroups
};

/// Membership marks over the ambient group: dense bytes for moderate orders,
/// a hash set otherwise.
class ElementMarks {
 public:
  explicit ElementMarks(std::uint32_t ambient_order);

  bool test(ElementId g) const {
    return dense_ ? bytes_[g] != 0 : sparse_.contains(g);
  }
  /// Returns true if `g` was newly marked.
  bool set(ElementId g) {
    if (dense_) {
      if (bytes_[g]) return false;
      bytes_[g] = 1;
      return true;
    }
    return sparse_.insert(g).second;
  }

 private:
  bool dense_;
  std::vector<std::uint8_t> bytes_;
  std::unordered_set<ElementId> sparse_;
};

/// Incremental subgroup closure (Dimino's coset method). Adding a generator
/// costs time proportional to the growth of the subgroup.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const FiniteGroup& group);

  /// Stop growing once the subgroup would exceed `limit` elements; the
  /// builder is then marked exceeded() and its contents are incomplete.
  void set_limit(std::uint32_t limit) { limit_ = limit; }
  bool exceeded() const { return exceeded_; }

  /// Extends the subgroup by `g`; no-op when `g` is already contained.
  void add(ElementId g);
  template <class Range>
  void add_all(const Range& gs) {
    for (ElementId g : gs) add(g);
  }

  bool contains(ElementId g) const { return marks_.test(g); }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  const std::vector<ElementId>& generators() const { return generators_; }
  SubgroupSet result() const;

 private:
  const FiniteGroup& group_;
  ElementMarks marks_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
  std::uint32_t limit_ = ~0u;
  bool exceeded_ = false;
};

SubgroupSet closure(const FiniteGroup& group, std::span<const ElementId> generators);

/// Smallest subgroup containing `base` and `extra`.
SubgroupSet join(const FiniteGroup& group, const SubgroupSet& base,
                 std::span<const ElementId> extra);

/// Closure of `generators`, or an empty optional once it exceeds `limit`.
std::optional<SubgroupSet> bounded_closure(const FiniteGroup& group, std::span<const ElementId> generators,
                                           std::uint32_t limit);

/// Greedy generating set of a subgroup given by its elements.
std::vector<ElementId> generating_set(const FiniteGroup& group, const SubgroupSet& subgroup);

}  // namespace normgraph
