#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zinbiel/comm_algebra.hpp"
#include "zinbiel/compoly.hpp"

namespace zinbiel {

/// Commutative algebra with a basis adapted to a positive filtration: basis
/// element i lies in level levels[i] >= 1.
class FilteredAlgebra {
 public:
  FilteredAlgebra(CommAlgebra algebra, std::vector<std::uint32_t> levels);

  const CommAlgebra& algebra() const { return algebra_; }
  const Alphabet& basis() const { return algebra_.basis(); }
  std::size_t dimension() const { return algebra_.dimension(); }
  const std::vector<std::uint32_t>& levels() const { return levels_; }
  std::uint32_t level(std::size_t i) const { return levels_[i]; }
  std::uint32_t max_level() const;

  /// Rows are the basis vectors in the coordinates of the algebra this one was
  /// derived from (identity when built directly).
  const std::vector<Vector>& change_of_basis() const { return change_of_basis_; }
  void set_change_of_basis(std::vector<Vector> rows) { change_of_basis_ = std::move(rows); }

 private:
  CommAlgebra algebra_;
  std::vector<std::uint32_t> levels_;
  std::vector<Vector> change_of_basis_;
};

struct FiltrationViolation {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t component = 0;       // basis element appearing in left*right
  std::uint32_t required_level = 0;
  std::uint32_t actual_level = 0;
};

/// Every basis element in x*y must have level >= level(x) + level(y).
std::vector<FiltrationViolation> validate_filtration(const FilteredAlgebra& algebra);

/// Filtration by powers A ⊇ A² ⊇ ... with a row-reduced adapted basis. Throws
/// Error("no positive filtration: algebra not nilpotent") when the chain stalls.
FilteredAlgebra standard_filtration(const CommAlgebra& algebra);

/// s_l(x_i, x_j) before normalisation:
///   sum_{a+b=l} x_a^{(k)} y_b^{(m)} - sum_{p=k+m}^{l} (x*y)_l^{(p)}.
ComPoly hat_relation(const FilteredAlgebra& algebra, std::size_t i, std::size_t j, std::uint32_t l);

/// Monic s_l(x, y) for every unordered basis pair and level(x)+level(y) <= l <= weight_bound.
std::vector<ComPoly> hat_relations(const FilteredAlgebra& algebra, std::uint32_t weight_bound);

/// Power series without constant term, truncated after t^N.
class TruncSeries {
 public:
  explicit TruncSeries(std::uint32_t truncation);

  std::uint32_t truncation() const { return static_cast<std::uint32_t>(coeffs_.size()); }
  /// Coefficient of t^n, 1 <= n <= N.
  const ComPoly& coefficient(std::uint32_t n) const;
  void set_coefficient(std::uint32_t n, ComPoly value);
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const Rational& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_index(std::uint32_t n) const;
  std::vector<ComPoly> coeffs_;
};

/// sum f_n t^n -> sum (1/n) f_n t^n.
TruncSeries rb_apply(const TruncSeries& s);

/// Cauchy product through degree N, each coefficient reduced by `reduction`
/// (a monic list; empty means no reduction). Throws on mismatched truncation.
TruncSeries series_product(const TruncSeries& s, const TruncSeries& u, const std::vector<ComPoly>& reduction);

/// a > b = R(a) b.
TruncSeries succ_product(const TruncSeries& a, const TruncSeries& b, const std::vector<ComPoly>& reduction);

/// R(s) u + s R(u).
TruncSeries star_b(const TruncSeries& s, const TruncSeries& u, const std::vector<ComPoly>& reduction);

/// phi(x) = sum_{i >= k} i x_i^{(k)} t^i for basis element x of level k.
/// Throws Error("truncation below level") when N < k.
TruncSeries phi(const FilteredAlgebra& algebra, std::size_t basis_index, std::uint32_t truncation);
/// Linear extension to a coordinate vector; terms above N are dropped.
TruncSeries phi(const FilteredAlgebra& algebra, const Vector& element, std::uint32_t truncation);

struct HomomorphismFailure {
  std::size_t left = 0;
  std::size_t right = 0;
  std::uint32_t degree = 0;
  ComPoly residue;
};

struct EmbeddingReport {
  std::uint32_t truncation = 0;
  std::vector<HomomorphismFailure> homomorphism_failures;
  std::size_t pairs_checked = 0;
  std::size_t zinbiel_triples_checked = 0;
  std::size_t zinbiel_failures = 0;
  std::size_t relation_count = 0;
  std::size_t basis_size = 0;
  BuchbergerReport buchberger;
  /// Weight up to which no linear form vanishes in the presented algebra; 0 when not certified.
  std::uint32_t injectivity_certified_to = 0;
  std::vector<std::string> notes;

  bool verified() const {
    return homomorphism_failures.empty() && zinbiel_failures == 0 && injectivity_certified_to == truncation;
  }
};

/// Checks that phi is a homomorphism into the Zinbiel algebra of truncated
/// series (star_b(phi x, phi y) = phi(x*y) modulo the relations), that
/// a > b = R(a)b satisfies the Zinbiel identity on phi-images, and certifies
/// injectivity by bounded Buchberger finding no linear leading monomial.
EmbeddingReport verify_embedding(const FilteredAlgebra& algebra, std::uint32_t truncation);

/// Random associative commutative nilpotent algebra of dimension 3 with small
/// rational structure constants, written in a random integer basis.
CommAlgebra random_nilpotent_algebra(std::mt19937_64& rng);

}  // namespace zinbiel
