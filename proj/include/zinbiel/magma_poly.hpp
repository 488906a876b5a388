#pragma once

#include <map>
#include <utility>

#include "zinbiel/rational.hpp"
#include "zinbiel/word.hpp"

namespace zinbiel {

struct WordGreater {
  using is_transparent = void;
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    return WordLess{}(b, a);
  }
};

/// Finite rational combination of non-associative words. Terms are kept in
/// descending weight order, so the leading monomial is the first entry.
class MagmaPoly {
 public:
  using Terms = std::map<Word, Rational, WordGreater>;

  MagmaPoly() = default;
  explicit MagmaPoly(const Word& w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const Rational& c);
  Rational coefficient(const Word& w) const;

  /// Throws Error("no leading monomial") on the zero polynomial.
  const Word& leading() const;
  const Rational& leading_coefficient() const;
  MagmaPoly monic() const;
  bool is_monic() const { return !is_zero() && leading_coefficient() == 1; }

  std::size_t max_length() const;

  MagmaPoly& operator+=(const MagmaPoly& other);
  MagmaPoly& operator-=(const MagmaPoly& other);
  MagmaPoly& operator*=(const Rational& c);

  friend MagmaPoly operator+(MagmaPoly a, const MagmaPoly& b) { return a += b; }
  friend MagmaPoly operator-(MagmaPoly a, const MagmaPoly& b) { return a -= b; }
  friend MagmaPoly operator*(MagmaPoly a, const Rational& c) { return a *= c; }
  friend MagmaPoly operator*(const Rational& c, MagmaPoly a) { return a *= c; }
  friend MagmaPoly operator-(MagmaPoly a) { return a *= Rational(-1); }
  friend bool operator==(const MagmaPoly& a, const MagmaPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Bilinear extension of (u, v) -> (u v).
MagmaPoly magma_product(const MagmaPoly& p, const MagmaPoly& q);

/// Leading monomial and the polynomial divided by its leading coefficient.
std::pair<Word, MagmaPoly> leading_and_monic(const MagmaPoly& p);

}  // namespace zinbiel
