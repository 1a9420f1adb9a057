#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace normgraph {

/// Square matrix over GF(p), row-major, entries in [0, p).
struct Matrix {
  std::uint32_t p = 2;
  std::uint32_t dim = 0;
  std::vector<std::uint32_t> entries;

  Matrix() = default;
  Matrix(std::uint32_t p_, std::uint32_t dim_);
  /// Rows are reduced mod p (negative values allowed).
  static Matrix from_rows(std::uint32_t p, const std::vector<std::vector<long long>>& rows);
  static Matrix identity(std::uint32_t p, std::uint32_t dim);

  std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return entries[r * dim + c]; }
  std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return entries[r * dim + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.entries < b.entries; }

  std::string to_string() const;
};

using Vector = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_inverse(const Matrix& a);  // throws on singular input
std::uint32_t determinant(const Matrix& a);
std::uint32_t rank(const Matrix& a);

/// Multiplicative order; throws on singular input.
std::uint64_t matrix_order(const Matrix& a);

/// Row vector times matrix.
Vector vec_times(const Vector& v, const Matrix& m);

/// Basis of {v : vA = v}, from exact elimination mod p. Empty iff A acts
/// fixed-point-freely.
std::vector<Vector> fixed_space(const Matrix& a);

}  // namespace normgraph
