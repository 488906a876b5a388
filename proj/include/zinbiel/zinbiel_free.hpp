#pragma once

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "zinbiel/magma_poly.hpp"

namespace zinbiel {

/// Element of the free Zinbiel algebra on the associative-word basis. The word
/// z1 z2 ... zm stands for the left comb (((z1 z2) z3) ... zm).
class ZinbElement {
 public:
  using Terms = std::map<AWord, Rational>;

  ZinbElement() = default;
  explicit ZinbElement(const AWord& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const AWord& w, const Rational& c);
  Rational coefficient(const AWord& w) const;

  ZinbElement& operator+=(const ZinbElement& other);
  ZinbElement& operator-=(const ZinbElement& other);
  ZinbElement& operator*=(const Rational& c);
  friend ZinbElement operator+(ZinbElement a, const ZinbElement& b) { return a += b; }
  friend ZinbElement operator-(ZinbElement a, const ZinbElement& b) { return a -= b; }
  friend ZinbElement operator*(ZinbElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const ZinbElement& a, const ZinbElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Sum over all interleavings of u and v that keep the internal order of both.
ZinbElement shuffle(const AWord& u, const AWord& v);

/// u * (v' z) = shuffle(u, v') z, extended bilinearly.
ZinbElement zinbiel_product(const ZinbElement& f, const ZinbElement& g);
ZinbElement zinbiel_product(const AWord& u, const AWord& v);

/// Anti-commutator f*g + g*f.
ZinbElement star(const ZinbElement& f, const ZinbElement& g);

/// Normal form modulo the Zinbiel relation family, read off as associative words.
ZinbElement to_left_comb(const MagmaPoly& p);

/// Left comb of an associative word, and the bijection extended linearly.
Word left_comb(const AWord& w);
MagmaPoly to_magma(const ZinbElement& z);

/// Perm algebra on basis e_0 .. e_{d-1} with a product table
/// table[i][j] = coefficients of e_i e_j.
class PermAlgebra {
 public:
  using Vector = std::vector<Rational>;

  /// The standard model e_i e_j = e_j.
  static PermAlgebra standard(std::size_t dimension);
  PermAlgebra(std::size_t dimension, std::vector<std::vector<Vector>> table);

  std::size_t dimension() const { return dimension_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Checks (x1x2)x3 = x1(x2x3) and x1(x2x3) = x2(x1x3) on all basis triples;
  /// throws Error naming the first failing triple.
  void validate() const;

 private:
  Vector multiply(const Vector& a, const Vector& b) const;

  std::size_t dimension_;
  std::vector<std::vector<Vector>> table_;
};

/// Element of P (x) Z: Perm basis index -> Zinbiel element.
using PermTensor = std::map<std::size_t, ZinbElement>;

/// (p (x) a)(q (x) b) = pq (x) (a > b) + qp (x) (a < b), with a > b the Zinbiel
/// product and a < b = b > a.
PermTensor perm_tensor_product(const PermAlgebra& perm, const PermTensor& x, const PermTensor& y);

struct PermTensorReport {
  std::size_t triples_checked = 0;
  std::size_t commutativity_violations = 0;
  std::size_t associativity_violations = 0;
  bool passed() const { return commutativity_violations == 0 && associativity_violations == 0; }
};

/// Validates the Perm algebra, then checks commutativity and associativity of
/// P (x) Z on every sampled triple.
PermTensorReport perm_tensor_check(const PermAlgebra& perm,
                                   const std::vector<std::array<PermTensor, 3>>& samples);

/// Random element with integer coefficients in [-3, 3] and words of length 1..max_degree.
ZinbElement random_zinb_element(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_degree,
                                std::size_t max_terms);
PermTensor random_perm_tensor(std::mt19937_64& rng, std::size_t perm_dimension, std::size_t alphabet_size,
                              std::size_t max_degree);

}  // namespace zinbiel
