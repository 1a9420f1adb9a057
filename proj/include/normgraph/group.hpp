#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace normgraph {

/// Index of an element inside its owning group. Valid ids are 0..order-1 and
/// the identity is always id 0.
using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

enum class Representation { multiplication_table, permutation, matrix_semidirect, direct_product };

std::string to_string(Representation r);

/// Raised when a group cannot be constructed from the given data.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element arithmetic of one concrete representation.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;

  virtual std::uint32_t order() const = 0;
  virtual ElementId multiply(ElementId a, ElementId b) const = 0;
  virtual ElementId invert(ElementId a) const = 0;
  virtual Representation representation() const = 0;
  virtual std::string describe(ElementId a) const = 0;
};

/// A finite group with exact element arithmetic. Immutable and cheap to copy
/// (the backend is shared).
class FiniteGroup {
 public:
  FiniteGroup(std::shared_ptr<const GroupBackend> backend, std::vector<ElementId> generators,
              std::string name = {});

  std::uint32_t order() const { return order_; }
  ElementId identity() const { return kIdentity; }
  Representation representation() const { return backend_->representation(); }
  const std::string& name() const { return name_; }

  ElementId multiply(ElementId a, ElementId b) const { return backend_->multiply(a, b); }
  ElementId invert(ElementId a) const { return backend_->invert(a); }

  /// g^h = h^-1 g h
  ElementId conjugate(ElementId g, ElementId h) const {
    return multiply(multiply(invert(h), g), h);
  }

  /// [a,b] = a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const {
    return multiply(multiply(invert(a), invert(b)), multiply(a, b));
  }

  ElementId power(ElementId g, std::uint64_t e) const;

  /// A generating set of the whole group (never contains the identity).
  const std::vector<ElementId>& generators() const { return generators_; }

  std::string describe(ElementId a) const { return backend_->describe(a); }

  const GroupBackend& backend() const { return *backend_; }
  std::shared_ptr<const GroupBackend> backend_ptr() const { return backend_; }

 private:
  std::shared_ptr<const GroupBackend> backend_;
  std::vector<ElementId> generators_;
  std::string name_;
  std::uint32_t order_;
};

/// Cayley-table backed group. Row-major table, identity at 0.
class TableGroup final : public GroupBackend {
 public:
  /// Validates closure, identity at index 0, inverses and associativity
  /// (exhaustive up to order 200, sampled above).
  TableGroup(std::uint32_t order, std::vector<ElementId> table);

  std::uint32_t order() const override { return order_; }
  ElementId multiply(ElementId a, ElementId b) const override {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  ElementId invert(ElementId a) const override { return inverse_[a]; }
  Representation representation() const override { return Representation::multiplication_table; }
  std::string describe(ElementId a) const override;

 private:
  std::uint32_t order_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
};

/// Componentwise product of two groups: id = i * |B| + j.
class DirectProductGroup final : public GroupBackend {
 public:
  DirectProductGroup(FiniteGroup a, FiniteGroup b);

  std::uint32_t order() const override { return a_.order() * b_.order(); }
  ElementId multiply(ElementId x, ElementId y) const override;
  ElementId invert(ElementId x) const override;
  Representation representation() const override { return Representation::direct_product; }
  std::string describe(ElementId x) const override;

  ElementId pack(ElementId i, ElementId j) const { return i * b_.order() + j; }
  const FiniteGroup& first() const { return a_; }
  const FiniteGroup& second() const { return b_; }

 private:
  FiniteGroup a_;
  FiniteGroup b_;
};

}  // namespace normgraph
