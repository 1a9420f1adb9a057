#include "normgraph/representations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace normgraph {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Permutation from_cycles(std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::uint32_t pt : cycle) {
      if (pt < 1 || pt > degree) throw GroupError("cycle point " + std::to_string(pt) + " out of range");
      if (used[pt - 1]) throw GroupError("point " + std::to_string(pt) + " repeated in cycles");
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      perm[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return perm;
}

PermutationGroup::PermutationGroup(std::uint32_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  for (const auto& g : generators) {
    if (g.size() != degree) throw GroupError("generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (std::uint32_t x : g) {
      if (x >= degree || seen[x]) throw GroupError("generator is not a permutation");
      seen[x] = true;
    }
  }
  std::map<Permutation, ElementId> found{{id, 0}};
  std::vector<Permutation> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      Permutation next = compose(queue[i], g);
      if (found.emplace(next, 0).second) {
        queue.push_back(std::move(next));
        if (queue.size() > kMaxOrder) throw GroupError("permutation group exceeds supported order");
      }
    }
  }
  ElementId next_id = 0;
  for (auto& [perm, idx] : found) {
    idx = next_id++;
    elements_.push_back(perm);
  }
  index_ = std::move(found);

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId c = index_.at(compose(elements_[a], elements_[b]));
      table_[a * n + b] = c;
      if (c == kIdentity) inverse_[a] = static_cast<ElementId>(b);
    }
  }
}

ElementId PermutationGroup::id_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw GroupError("permutation is not in the group");
  return it->second;
}

std::string PermutationGroup::describe(ElementId a) const {
  const Permutation& perm = elements_[a];
  std::ostringstream os;
  std::vector<bool> done(degree_, false);
  bool any = false;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (done[i] || perm[i] == i) continue;
    any = true;
    os << '(';
    for (std::uint32_t j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      os << (j == i ? "" : ",") << j + 1;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

SemidirectGroup::SemidirectGroup(std::uint32_t p, std::uint32_t dim, const std::vector<Matrix>& generators)
    : p_(p), dim_(dim) {
  if (!is_prime(p)) throw GroupError("field size " + std::to_string(p) + " is not prime");
  if (dim == 0) throw GroupError("dimension must be positive");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < dim; ++i) n *= p;
  if (n > (1u << 24)) throw GroupError("vector space too large");
  n_order_ = static_cast<std::uint32_t>(n);

  for (const auto& m : generators) {
    if (m.p != p || m.dim != dim) throw GroupError("matrix field or dimension inconsistent with p/dim");
    if (determinant(m) == 0) throw GroupError("singular matrix " + m.to_string());
  }

  // Close H under multiplication.
  const Matrix id = Matrix::identity(p, dim);
  std::map<Matrix, std::uint32_t> found{{id, 0}};
  std::vector<Matrix> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators) {
      Matrix next = matrix_mul(queue[i], g);
      if (found.emplace(next, 0).second) {
        queue.push_back(std::move(next));
        if (queue.size() * n > 0xFFFFFFFFull / 2) throw GroupError("semidirect product too large");
      }
    }
  }
  h_.push_back(id);
  for (const auto& [m, idx] : found)
    if (m != id) h_.push_back(m);
  h_order_ = static_cast<std::uint32_t>(h_.size());
  for (std::uint32_t i = 0; i < h_order_; ++i) h_lookup_[h_[i]] = i;
  for (const auto& g : generators)
    if (g != id) gen_h_.push_back(h_lookup_.at(g));

  h_mul_.resize(static_cast<std::size_t>(h_order_) * h_order_);
  h_inv_.resize(h_order_);
  for (std::uint32_t a = 0; a < h_order_; ++a)
    for (std::uint32_t b = 0; b < h_order_; ++b) {
      const std::uint32_t c = h_lookup_.at(matrix_mul(h_[a], h_[b]));
      h_mul_[a * h_order_ + b] = c;
      if (c == 0) h_inv_[a] = b;
    }

  act_.resize(static_cast<std::size_t>(h_order_) * n_order_);
  for (std::uint32_t h = 0; h < h_order_; ++h) {
    for (std::uint32_t v = 0; v < n_order_; ++v) {
      const Vector digits = decode(v);
      Vector image(dim, 0);
      for (std::uint32_t i = 0; i < dim; ++i) {
        if (!digits[i]) continue;
        for (std::uint32_t j = 0; j < dim; ++j)
          image[j] = (image[j] + digits[i] * h_[h].at(i, j)) % p;
      }
      act_[static_cast<std::size_t>(h) * n_order_ + v] = encode(image);
    }
  }

  // Chunked digit-wise addition tables.
  std::uint32_t digits_per_chunk = 1;
  chunk_base_ = p;
  while (digits_per_chunk < dim && chunk_base_ * p <= 256) {
    chunk_base_ *= p;
    ++digits_per_chunk;
  }
  chunks_ = (dim + digits_per_chunk - 1) / digits_per_chunk;
  chunk_add_.resize(static_cast<std::size_t>(chunk_base_) * chunk_base_);
  for (std::uint32_t x = 0; x < chunk_base_; ++x)
    for (std::uint32_t y = 0; y < chunk_base_; ++y) {
      std::uint32_t a = x, b = y, out = 0, scale = 1;
      for (std::uint32_t d = 0; d < digits_per_chunk; ++d) {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
      }
      chunk_add_[x * chunk_base_ + y] = out;
    }
  neg_.resize(n_order_);
  for (std::uint32_t v = 0; v < n_order_; ++v) {
    Vector d = decode(v);
    for (auto& x : d) x = (p - x) % p;
    neg_[v] = encode(d);
  }
}

std::uint32_t SemidirectGroup::h_index(const Matrix& m) const {
  auto it = h_lookup_.find(m);
  if (it == h_lookup_.end()) throw GroupError("matrix is not in H: " + m.to_string());
  return it->second;
}

std::uint32_t SemidirectGroup::encode(const Vector& v) const {
  std::uint32_t code = 0, scale = 1;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    code += (v[i] % p_) * scale;
    scale *= p_;
  }
  return code;
}

Vector SemidirectGroup::decode(std::uint32_t code) const {
  Vector v(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    v[i] = code % p_;
    code /= p_;
  }
  return v;
}

std::string SemidirectGroup::describe(ElementId a) const {
  const Vector v = decode(a % n_order_);
  std::ostringstream os;
  os << "(v=[";
  for (std::uint32_t i = 0; i < dim_; ++i) os << (i ? "," : "") << v[i];
  os << "], h=" << h_[a / n_order_].to_string() << ")";
  return os.str();
}

SubgroupSet SemidirectGroup::normal_part() const {
  std::vector<ElementId> els(n_order_);
  std::iota(els.begin(), els.end(), 0u);
  std::vector<ElementId> gens;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < dim_; ++i, scale *= p_) gens.push_back(scale);
  return SubgroupSet::from_elements(std::move(els), std::move(gens));
}

SubgroupSet SemidirectGroup::complement_part() const {
  std::vector<ElementId> els;
  for (std::uint32_t h = 0; h < h_order_; ++h) els.push_back(pack(0, h));
  std::vector<ElementId> gens;
  for (std::uint32_t h : gen_h_) gens.push_back(pack(0, h));
  return SubgroupSet::from_elements(std::move(els), std::move(gens));
}

std::vector<ElementId> greedy_generators(const GroupBackend& backend) {
  // Non-owning view of the backend just for closure arithmetic.
  FiniteGroup view(std::shared_ptr<const GroupBackend>(&backend, [](const GroupBackend*) {}), {});
  ClosureBuilder b(view);
  for (ElementId g = 0; g < backend.order() && b.order() < backend.order(); ++g) b.add(g);
  return b.generators();
}

namespace {

FiniteGroup from_table(std::uint32_t order, std::vector<ElementId> table, std::string name) {
  auto backend = std::make_shared<const TableGroup>(order, std::move(table));
  auto gens = greedy_generators(*backend);
  return FiniteGroup(std::move(backend), std::move(gens), std::move(name));
}

constexpr std::uint32_t kMaxTableOrder = 4096;

}  // namespace

FiniteGroup make_cyclic(std::uint32_t n) {
  if (n < 1 || n > kMaxTableOrder) throw GroupError("cyclic group order out of supported range");
  std::vector<ElementId> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  auto backend = std::make_shared<const TableGroup>(n, std::move(table));
  std::vector<ElementId> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup(std::move(backend), std::move(gens), "C" + std::to_string(n));
}

FiniteGroup make_dihedral(std::uint32_t n) {
  if (n < 1 || 2 * n > kMaxTableOrder) throw GroupError("dihedral parameter out of supported range");
  // id = a*n + i  <->  r^i s^a ;  (r^i s^a)(r^j s^b) = r^(i + (-1)^a j) s^(a+b)
  const std::uint32_t m = 2 * n;
  std::vector<ElementId> table(static_cast<std::size_t>(m) * m);
  for (std::uint32_t x = 0; x < m; ++x)
    for (std::uint32_t y = 0; y < m; ++y) {
      const std::uint32_t a = x / n, i = x % n, b = y / n, j = y % n;
      const std::uint32_t rot = a ? (i + n - j) % n : (i + j) % n;
      table[x * m + y] = ((a + b) % 2) * n + rot;
    }
  auto backend = std::make_shared<const TableGroup>(m, std::move(table));
  std::vector<ElementId> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return FiniteGroup(std::move(backend), std::move(gens), "D" + std::to_string(2 * n));
}

FiniteGroup make_symmetric(std::uint32_t n) {
  if (n < 1 || n > 5) throw GroupError("symmetric groups are supported for n <= 5");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(from_cycles(n, {{1, 2}}));
    if (n >= 3) {
      std::vector<std::uint32_t> cycle(n);
      std::iota(cycle.begin(), cycle.end(), 1u);
      gens.push_back(from_cycles(n, {cycle}));
    }
  }
  FiniteGroup g = make_permutation_group(n, gens);
  return FiniteGroup(g.backend_ptr(), g.generators(), "S" + std::to_string(n));
}

FiniteGroup make_permutation_group(std::uint32_t degree, const std::vector<Permutation>& generators) {
  auto backend = std::make_shared<const PermutationGroup>(degree, generators);
  std::vector<ElementId> gens;
  for (const auto& g : generators) gens.push_back(backend->id_of(g));
  return FiniteGroup(std::move(backend), std::move(gens), "perm" + std::to_string(degree));
}

FiniteGroup make_table_group(std::uint32_t order, std::vector<ElementId> table) {
  if (order > kMaxTableOrder) throw GroupError("multiplication table too large");
  return from_table(order, std::move(table), "table" + std::to_string(order));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  auto backend = std::make_shared<const DirectProductGroup>(a, b);
  std::vector<ElementId> gens;
  for (ElementId g : a.generators()) gens.push_back(backend->pack(g, kIdentity));
  for (ElementId h : b.generators()) gens.push_back(backend->pack(kIdentity, h));
  return FiniteGroup(std::move(backend), std::move(gens), a.name() + "x" + b.name());
}

FiniteGroup semidirect_product(std::uint32_t p, std::uint32_t dim, const std::vector<Matrix>& h_generators) {
  auto backend = std::make_shared<const SemidirectGroup>(p, dim, h_generators);
  std::vector<ElementId> gens;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < dim; ++i, scale *= p) gens.push_back(scale);
  for (std::uint32_t h : backend->generator_h_indices()) gens.push_back(backend->pack(0, h));
  std::string name = std::to_string(p) + "^" + std::to_string(dim) + ":" + std::to_string(backend->h_order());
  return FiniteGroup(std::move(backend), std::move(gens), std::move(name));
}

const SemidirectGroup* as_semidirect(const FiniteGroup& g) {
  return dynamic_cast<const SemidirectGroup*>(&g.backend());
}

const PermutationGroup* as_permutation(const FiniteGroup& g) {
  return dynamic_cast<const PermutationGroup*>(&g.backend());
}

}  // namespace normgraph
