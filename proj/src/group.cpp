#include "normgraph/group.hpp"

#include <random>

namespace normgraph {

std::string to_string(Representation r) {
  switch (r) {
    case Representation::multiplication_table: return "multiplication-table";
    case Representation::permutation: return "permutation";
    case Representation::matrix_semidirect: return "matrix-semidirect";
    case Representation::direct_product: return "direct-product";
  }
  return "unknown";
}

FiniteGroup::FiniteGroup(std::shared_ptr<const GroupBackend> backend,
                         std::vector<ElementId> generators, std::string name)
    : backend_(std::move(backend)), generators_(std::move(generators)), name_(std::move(name)) {
  if (!backend_) throw GroupError("null group backend");
  order_ = backend_->order();
  std::erase_if(generators_, [](ElementId g) { return g == kIdentity; });
  for (ElementId g : generators_)
    if (g >= order_) throw GroupError("generator out of range");
}

ElementId FiniteGroup::power(ElementId g, std::uint64_t e) const {
  ElementId result = kIdentity;
  ElementId base = g;
  while (e) {
    if (e & 1u) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1u;
  }
  return result;
}

TableGroup::TableGroup(std::uint32_t order, std::vector<ElementId> table)
    : order_(order), table_(std::move(table)), inverse_(order, order) {
  if (order == 0) throw GroupError("group order must be positive");
  if (table_.size() != static_cast<std::size_t>(order) * order)
    throw GroupError("multiplication table has wrong size");
  for (ElementId v : table_)
    if (v >= order) throw GroupError("multiplication table entry out of range");

  for (ElementId g = 0; g < order; ++g) {
    if (multiply(kIdentity, g) != g || multiply(g, kIdentity) != g)
      throw GroupError("element 0 is not a two-sided identity");
  }
  // Latin square rows give unique right inverses.
  for (ElementId g = 0; g < order; ++g) {
    for (ElementId h = 0; h < order; ++h) {
      if (multiply(g, h) == kIdentity) {
        if (inverse_[g] != order) throw GroupError("element has two inverses");
        inverse_[g] = h;
      }
    }
    if (inverse_[g] == order) throw GroupError("element " + std::to_string(g) + " has no inverse");
    if (multiply(inverse_[g], g) != kIdentity) throw GroupError("inverse is not two-sided");
  }

  auto check = [&](ElementId a, ElementId b, ElementId c) {
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
      throw GroupError("multiplication is not associative at (" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (order <= 200) {
    for (ElementId a = 0; a < order; ++a)
      for (ElementId b = 0; b < order; ++b)
        for (ElementId c = 0; c < order; ++c) check(a, b, c);
  } else {
    std::mt19937 rng(12345u);
    std::uniform_int_distribution<ElementId> pick(0, order - 1);
    for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

std::string TableGroup::describe(ElementId a) const { return "e" + std::to_string(a); }

DirectProductGroup::DirectProductGroup(FiniteGroup a, FiniteGroup b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (static_cast<std::uint64_t>(a_.order()) * b_.order() > 0xFFFFFFFFull)
    throw GroupError("direct product too large");
}

ElementId DirectProductGroup::multiply(ElementId x, ElementId y) const {
  const std::uint32_t m = b_.order();
  return pack(a_.multiply(x / m, y / m), b_.multiply(x % m, y % m));
}

ElementId DirectProductGroup::invert(ElementId x) const {
  const std::uint32_t m = b_.order();
  return pack(a_.invert(x / m), b_.invert(x % m));
}

std::string DirectProductGroup::describe(ElementId x) const {
  const std::uint32_t m = b_.order();
  return "(" + a_.describe(x / m) + ", " + b_.describe(x % m) + ")";
}

}  // namespace normgraph
