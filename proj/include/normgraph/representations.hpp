#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "normgraph/group.hpp"
#include "normgraph/matrix.hpp"
#include "normgraph/subgroup.hpp"

namespace normgraph {

/// Permutation on points 0..degree-1. Products read left to right: (a*b)(i) = b(a(i)).
using Permutation = std::vector<std::uint32_t>;

Permutation compose(const Permutation& a, const Permutation& b);

/// Permutation of the given degree from 1-based cycles, e.g. {{1,2,3}}.
Permutation from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

/// Group of permutations enumerated from generators; elements sorted
/// lexicographically by image list so the identity is id 0.
class PermutationGroup final : public GroupBackend {
 public:
  static constexpr std::uint32_t kMaxOrder = 5040;

  PermutationGroup(std::uint32_t degree, const std::vector<Permutation>& generators);

  std::uint32_t order() const override { return static_cast<std::uint32_t>(elements_.size()); }
  ElementId multiply(ElementId a, ElementId b) const override {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementId invert(ElementId a) const override { return inverse_[a]; }
  Representation representation() const override { return Representation::permutation; }
  std::string describe(ElementId a) const override;

  std::uint32_t degree() const { return degree_; }
  const Permutation& permutation(ElementId a) const { return elements_[a]; }
  /// Throws when `p` is not an element.
  ElementId id_of(const Permutation& p) const;

 private:
  std::uint32_t degree_;
  std::vector<Permutation> elements_;
  std::map<Permutation, ElementId> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
};

/// N ⋊ H with N = GF(p)^dim (row vectors) and H a finite matrix group.
/// (v1,h1)(v2,h2) = (v1·M(h2) + v2, h1h2). Element id = h * p^dim + code(v)
/// where code(v) = sum v[i] p^i, and H index 0 is the identity matrix; the
/// remaining matrices follow in entry-lexicographic order.
class SemidirectGroup final : public GroupBackend {
 public:
  SemidirectGroup(std::uint32_t p, std::uint32_t dim, const std::vector<Matrix>& generators);

  std::uint32_t order() const override { return n_order_ * h_order_; }
  ElementId multiply(ElementId a, ElementId b) const override {
    const std::uint32_t ha = a / n_order_, va = a % n_order_;
    const std::uint32_t hb = b / n_order_, vb = b % n_order_;
    return h_mul_[ha * h_order_ + hb] * n_order_ + add(act_[hb * n_order_ + va], vb);
  }
  ElementId invert(ElementId a) const override {
    const std::uint32_t h = a / n_order_, v = a % n_order_;
    const std::uint32_t hi = h_inv_[h];
    return hi * n_order_ + neg_[act_[hi * n_order_ + v]];
  }
  Representation representation() const override { return Representation::matrix_semidirect; }
  std::string describe(ElementId a) const override;

  std::uint32_t p() const { return p_; }
  std::uint32_t dim() const { return dim_; }
  std::uint32_t n_order() const { return n_order_; }
  std::uint32_t h_order() const { return h_order_; }
  const Matrix& h_matrix(std::uint32_t h) const { return h_[h]; }
  const std::vector<Matrix>& h_matrices() const { return h_; }
  /// Index of a matrix of H; throws when absent.
  std::uint32_t h_index(const Matrix& m) const;
  const std::vector<std::uint32_t>& generator_h_indices() const { return gen_h_; }

  std::uint32_t encode(const Vector& v) const;
  Vector decode(std::uint32_t code) const;
  ElementId pack(std::uint32_t code, std::uint32_t h) const { return h * n_order_ + code; }
  ElementId element(const Vector& v, const Matrix& m) const { return pack(encode(v), h_index(m)); }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t c = 0; c < chunks_; ++c) {
      out += chunk_add_[(x % chunk_base_) * chunk_base_ + y % chunk_base_] * scale;
      x /= chunk_base_;
      y /= chunk_base_;
      scale *= chunk_base_;
    }
    return out;
  }

  /// The embedded copy of N, {(v, 1)}.
  SubgroupSet normal_part() const;
  /// The complement {(0, h)}.
  SubgroupSet complement_part() const;

 private:
  std::uint32_t p_, dim_;
  std::uint32_t n_order_ = 1, h_order_ = 0;
  std::vector<Matrix> h_;
  std::map<Matrix, std::uint32_t> h_lookup_;
  std::vector<std::uint32_t> gen_h_;
  std::vector<std::uint32_t> h_mul_, h_inv_;
  std::vector<std::uint32_t> act_;  // act_[h * |N| + v] = code(v · M(h))
  std::vector<std::uint32_t> neg_;
  std::uint32_t chunk_base_ = 1, chunks_ = 0;
  std::vector<std::uint32_t> chunk_add_;
};

FiniteGroup make_cyclic(std::uint32_t n);
FiniteGroup make_dihedral(std::uint32_t n);  // order 2n
FiniteGroup make_symmetric(std::uint32_t n);  // n <= 5
FiniteGroup make_permutation_group(std::uint32_t degree,
                                   const std::vector<Permutation>& generators);
FiniteGroup make_table_group(std::uint32_t order, std::vector<ElementId> table);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup semidirect_product(std::uint32_t p, std::uint32_t dim,
                               const std::vector<Matrix>& h_generators);

/// Backend downcast; nullptr for other representations.
const SemidirectGroup* as_semidirect(const FiniteGroup& g);
const PermutationGroup* as_permutation(const FiniteGroup& g);

/// Greedy generating set read off the multiplication of an arbitrary backend.
std::vector<ElementId> greedy_generators(const GroupBackend& backend);

}  // namespace normgraph
