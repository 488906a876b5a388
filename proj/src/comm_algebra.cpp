#include "zinbiel/comm_algebra.hpp"

#include <algorithm>

namespace zinbiel {

CommAlgebra::CommAlgebra(Alphabet basis)
    : basis_(std::move(basis)), table_(basis_.size() * basis_.size(), Vector(basis_.size())) {}

CommAlgebra CommAlgebra::trivial(std::size_t dimension) { return CommAlgebra(Alphabet::standard(dimension)); }

CommAlgebra CommAlgebra::truncated_polynomial(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  CommAlgebra a{Alphabet(names)};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; i + j <= n; ++j) a.set_product(i - 1, j - 1, unit_vector(n, i + j - 1));
  }
  return a;
}

CommAlgebra CommAlgebra::idempotent() {
  CommAlgebra a{Alphabet({"x"})};
  a.set_product(0, 0, {Rational(1)});
  return a;
}

void CommAlgebra::set_product(std::size_t i, std::size_t j, Vector value) {
  if (i >= dimension() || j >= dimension()) throw Error("product index outside the basis");
  if (value.size() != dimension()) throw Error("product vector has the wrong dimension");
  table_[i * dimension() + j] = value;
  table_[j * dimension() + i] = std::move(value);
}

Vector CommAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dimension();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const Vector& p = product(i, j);
      for (std::size_t k = 0; k < d; ++k) out[k] += a[i] * b[j] * p[k];
    }
  }
  return out;
}

bool CommAlgebra::is_associative() const {
  const std::size_t d = dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Vector ei = unit_vector(d, i), ej = unit_vector(d, j), ek = unit_vector(d, k);
        if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek))) return false;
      }
    }
  }
  return true;
}

bool CommAlgebra::is_zero_product() const {
  return std::all_of(table_.begin(), table_.end(),
                     [](const Vector& v) { return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; }); });
}

Vector unit_vector(std::size_t dimension, std::size_t i) {
  Vector v(dimension);
  v[i] = 1;
  return v;
}

std::vector<Vector> row_reduce(std::vector<Vector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = 1 / rows[rank][col];
    for (auto& c : rows[rank]) c *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

Vector coordinates(const std::vector<Vector>& basis, const Vector& v) {
  // Solve sum_i c_i basis[i] = v by reducing the augmented transpose.
  const std::size_t n = basis.size();
  const std::size_t d = v.size();
  std::vector<Vector> m(d, Vector(n + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < n; ++i) m[r][i] = basis[i][r];
    m[r][n] = v[r];
  }
  auto reduced = row_reduce(std::move(m));
  Vector out(n);
  for (const auto& row : reduced) {
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& c) { return c != 0; });
    auto col = static_cast<std::size_t>(lead - row.begin());
    if (col == n) throw Error("vector is outside the span of the basis");
    out[col] = row[n];
  }
  return out;
}

}  // namespace zinbiel
