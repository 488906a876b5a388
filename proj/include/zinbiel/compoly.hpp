#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zinbiel/rational.hpp"
#include "zinbiel/word.hpp"

namespace zinbiel {

/// The generator x_i^{(k)}: a basis letter x of level k, lifted to weight i >= k.
struct GenSymbol {
  Rank base = 0;
  std::uint32_t level = 1;
  std::uint32_t weight = 1;

  /// Symbols are ordered by (weight, level, base rank).
  friend std::strong_ordering operator<=>(const GenSymbol& a, const GenSymbol& b) {
    if (auto c = a.weight <=> b.weight; c != 0) return c;
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.base <=> b.base;
  }
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
};

/// Throws Error unless weight >= level >= 1.
GenSymbol make_symbol(Rank base, std::uint32_t level, std::uint32_t weight);

/// Commutative monomial: a sorted multiset of symbols (empty = 1).
class ComMonomial {
 public:
  ComMonomial() = default;
  explicit ComMonomial(std::vector<GenSymbol> factors);
  static ComMonomial of(const GenSymbol& s) { return ComMonomial({s}); }

  const std::vector<GenSymbol>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  std::uint64_t weight() const { return weight_; }

  bool divides(const ComMonomial& other) const;
  /// other / *this; requires divides(other).
  ComMonomial quotient_of(const ComMonomial& other) const;
  ComMonomial lcm(const ComMonomial& other) const;
  bool coprime(const ComMonomial& other) const;

  friend ComMonomial operator*(const ComMonomial& a, const ComMonomial& b);
  friend bool operator==(const ComMonomial& a, const ComMonomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<GenSymbol> factors_;
  std::uint64_t weight_ = 0;
};

/// Factor count, then total weight, then lexicographic on the ascending factor
/// sequences. Multiplicative, and linear monomials sit below all quadratic ones.
std::strong_ordering com_compare(const ComMonomial& a, const ComMonomial& b);

struct ComMonomialGreater {
  bool operator()(const ComMonomial& a, const ComMonomial& b) const { return com_compare(a, b) > 0; }
};

class ComPoly {
 public:
  using Terms = std::map<ComMonomial, Rational, ComMonomialGreater>;

  ComPoly() = default;
  explicit ComPoly(const ComMonomial& m, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const ComMonomial& m, const Rational& c);
  Rational coefficient(const ComMonomial& m) const;

  /// Throws Error on zero.
  const ComMonomial& leading() const;
  const Rational& leading_coefficient() const;
  ComPoly monic() const;

  /// True when every monomial has the same weight.
  bool is_homogeneous() const;

  ComPoly& operator+=(const ComPoly& other);
  ComPoly& operator-=(const ComPoly& other);
  ComPoly& operator*=(const Rational& c);
  friend ComPoly operator+(ComPoly a, const ComPoly& b) { return a += b; }
  friend ComPoly operator-(ComPoly a, const ComPoly& b) { return a -= b; }
  friend ComPoly operator*(ComPoly a, const Rational& c) { return a *= c; }
  friend ComPoly operator*(const Rational& c, ComPoly a) { return a *= c; }
  friend ComPoly operator*(const ComPoly& a, const ComPoly& b);
  friend ComPoly operator*(const ComPoly& a, const ComMonomial& m);
  friend bool operator==(const ComPoly& a, const ComPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// One reduction step: subtracts coefficient * multiplier * basis[index].
struct ComRewriteStep {
  Rational coefficient;
  ComMonomial multiplier;
  std::size_t index = 0;
};

/// Full reduction, largest reducible term first. `basis` must be monic. The
/// trace, when requested, satisfies p - result = sum of coefficient * multiplier * basis[index].
ComPoly com_reduce(const ComPoly& p, const std::vector<ComPoly>& basis, std::vector<ComRewriteStep>* trace = nullptr);

/// Buchberger S-polynomial of two nonzero polynomials (made monic first).
ComPoly s_polynomial(const ComPoly& f, const ComPoly& g);

struct BuchbergerReport {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_by_bound = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::vector<ComMonomial> new_leading;
  /// Leading monomials of the final basis with at most one factor.
  std::vector<ComMonomial> linear_leading;
  bool linear_alarm() const { return !linear_leading.empty(); }
};

struct BuchbergerResult {
  std::vector<ComPoly> basis;
  BuchbergerReport report;
};

/// Buchberger completion over pairs whose lcm has weight <= weight_bound and at
/// most factor_bound factors. Pairs are processed in ascending order of lcm.
BuchbergerResult buchberger_bounded(const std::vector<ComPoly>& generators, std::uint64_t weight_bound,
                                    std::size_t factor_bound);

/// Renders x_i^(k) as "<base>_<i>^(<k>)".
std::string format_symbol(const GenSymbol& s, const Alphabet& alphabet);
std::string format_monomial(const ComMonomial& m, const Alphabet& alphabet);
std::string format_compoly(const ComPoly& p, const Alphabet& alphabet);

}  // namespace zinbiel
