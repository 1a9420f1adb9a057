#include "normgraph/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace normgraph {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.p, a.dim);
  for (std::uint32_t r = 0; r < a.dim; ++r)
    for (std::uint32_t c = 0; c < a.dim; ++c) t.at(c, r) = a.at(r, c);
  return t;
}

// Reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<std::uint32_t> row_reduce(Matrix& m) {
  const std::uint32_t p = m.p, n = m.dim;
  std::vector<std::uint32_t> pivots;
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < n && row < n; ++col) {
    std::uint32_t sel = row;
    while (sel < n && m.at(sel, col) == 0) ++sel;
    if (sel == n) continue;
    for (std::uint32_t c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(row, c));
    const std::uint64_t inv = mod_inverse(m.at(row, col), p);
    for (std::uint32_t c = 0; c < n; ++c) m.at(row, c) = static_cast<std::uint32_t>(m.at(row, c) * inv % p);
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const std::uint64_t f = m.at(r, col);
      for (std::uint32_t c = 0; c < n; ++c)
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + (p - f) * m.at(row, c)) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::uint32_t p_, std::uint32_t dim_) : p(p_), dim(dim_), entries(dim_ * dim_, 0) {}

Matrix Matrix::from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows) {
  Matrix m(p, static_cast<std::uint32_t>(rows.size()));
  for (std::uint32_t r = 0; r < m.dim; ++r) {
    if (rows[r].size() != m.dim) throw std::invalid_argument("matrix is not square");
    for (std::uint32_t c = 0; c < m.dim; ++c) {
      long long v = rows[r][c] % static_cast<long long>(p);
      if (v < 0) v += p;
      m.at(r, c) = static_cast<std::uint32_t>(v);
    }
  }
  return m;
}

Matrix Matrix::identity(std::uint32_t p, std::uint32_t dim) {
  Matrix m(p, dim);
  for (std::uint32_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::uint32_t r = 0; r < dim; ++r) {
    os << (r ? ",[" : "[");
    for (std::uint32_t c = 0; c < dim; ++c) os << (c ? "," : "") << at(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
  if (a.p != b.p || a.dim != b.dim) throw std::invalid_argument("matrix shape or field mismatch");
  Matrix c(a.p, a.dim);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t k = 0; k < a.dim; ++k) {
      const std::uint64_t aik = a.at(i, k);
      if (!aik) continue;
      for (std::uint32_t j = 0; j < a.dim; ++j)
        c.at(i, j) = static_cast<std::uint32_t>((c.at(i, j) + aik * b.at(k, j)) % a.p);
    }
  return c;
}

std::uint32_t rank(const Matrix& a) {
  Matrix m = a;
  return static_cast<std::uint32_t>(row_reduce(m).size());
}

std::uint32_t determinant(const Matrix& a) {
  Matrix m = a;
  const std::uint32_t p = a.p, n = a.dim;
  std::uint64_t det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t sel = col;
    while (sel < n && m.at(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::uint32_t c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(col, c));
      det = (p - det) % p;
    }
    det = det * m.at(col, col) % p;
    const std::uint64_t inv = mod_inverse(m.at(col, col), p);
    for (std::uint32_t r = col + 1; r < n; ++r) {
      const std::uint64_t f = m.at(r, col) * inv % p;
      if (!f) continue;
      for (std::uint32_t c = col; c < n; ++c)
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + (p - f) * m.at(col, c)) % p);
    }
  }
  return static_cast<std::uint32_t>(det);
}

Matrix matrix_inverse(const Matrix& a) {
  const std::uint32_t p = a.p, n = a.dim;
  if (determinant(a) == 0) throw std::invalid_argument("singular matrix");
  // Gauss-Jordan on [A | I].
  Matrix m = a, inv = Matrix::identity(p, n);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t sel = col;
    while (m.at(sel, col) == 0) ++sel;
    for (std::uint32_t c = 0; c < n; ++c) {
      std::swap(m.at(sel, c), m.at(col, c));
      std::swap(inv.at(sel, c), inv.at(col, c));
    }
    const std::uint64_t f = mod_inverse(m.at(col, col), p);
    for (std::uint32_t c = 0; c < n; ++c) {
      m.at(col, c) = static_cast<std::uint32_t>(m.at(col, c) * f % p);
      inv.at(col, c) = static_cast<std::uint32_t>(inv.at(col, c) * f % p);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == 0) continue;
      const std::uint64_t g = m.at(r, col);
      for (std::uint32_t c = 0; c < n; ++c) {
        m.at(r, c) = static_cast<std::uint32_t>((m.at(r, c) + (p - g) * m.at(col, c)) % p);
        inv.at(r, c) = static_cast<std::uint32_t>((inv.at(r, c) + (p - g) * inv.at(col, c)) % p);
      }
    }
  }
  return inv;
}

std::uint64_t matrix_order(const Matrix& a) {
  if (determinant(a) == 0) throw std::invalid_argument("matrix_order of a singular matrix");
  const Matrix id = Matrix::identity(a.p, a.dim);
  Matrix x = a;
  std::uint64_t k = 1;
  while (x != id) {
    x = matrix_mul(x, a);
    ++k;
  }
  return k;
}

Vector vec_times(const Vector& v, const Matrix& m) {
  Vector out(m.dim, 0);
  for (std::uint32_t i = 0; i < m.dim; ++i) {
    if (!v[i]) continue;
    for (std::uint32_t j = 0; j < m.dim; ++j)
      out[j] = static_cast<std::uint32_t>((out[j] + static_cast<std::uint64_t>(v[i]) * m.at(i, j)) % m.p);
  }
  return out;
}

std::vector<Vector> fixed_space(const Matrix& a) {
  // vA = v  <=>  (A - I)^T v^T = 0
  Matrix b = a;
  for (std::uint32_t i = 0; i < a.dim; ++i) b.at(i, i) = (b.at(i, i) + a.p - 1) % a.p;
  Matrix m = transpose(b);
  const std::vector<std::uint32_t> pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.dim, false);
  for (std::uint32_t c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::uint32_t free = 0; free < a.dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.dim, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (a.p - m.at(static_cast<std::uint32_t>(r), free)) % a.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace normgraph
