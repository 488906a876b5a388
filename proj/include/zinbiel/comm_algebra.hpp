#pragma once

#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/word.hpp"

namespace zinbiel {

using Vector = std::vector<Rational>;

/// Finite-dimensional commutative algebra given by an ordered basis and exact
/// structure constants. Products are stored symmetrically, so commutativity
/// holds by construction; associativity is checked on request.
class CommAlgebra {
 public:
  explicit CommAlgebra(Alphabet basis);

  /// All products zero, basis x, y, z (or x1 ... xd).
  static CommAlgebra trivial(std::size_t dimension);
  /// t k[t] / (t^{n+1}) on the basis x_i = t^i.
  static CommAlgebra truncated_polynomial(std::size_t n);
  /// One idempotent generator x with x*x = x.
  static CommAlgebra idempotent();

  const Alphabet& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  void set_product(std::size_t i, std::size_t j, Vector value);
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dimension() + j]; }
  Vector multiply(const Vector& a, const Vector& b) const;

  bool is_associative() const;
  bool is_zero_product() const;

  friend bool operator==(const CommAlgebra&, const CommAlgebra&) = default;

 private:
  Alphabet basis_;
  std::vector<Vector> table_;
};

Vector unit_vector(std::size_t dimension, std::size_t i);

/// Row-reduced echelon basis of the span of `rows` (leftmost pivot, first
/// nonzero row chosen as pivot row, pivots normalised to 1).
std::vector<Vector> row_reduce(std::vector<Vector> rows);

/// Coordinates of `v` in the basis `basis` (rows); throws Error when `v` is
/// outside the span.
Vector coordinates(const std::vector<Vector>& basis, const Vector& v);

}  // namespace zinbiel
