#pragma once

#include <random>
#include <string>

#include "zinbiel/sexpr.hpp"

namespace testing {

inline const zinbiel::Alphabet& xyz() {
  static const zinbiel::Alphabet a = zinbiel::Alphabet::standard(3);
  return a;
}

inline zinbiel::Word W(const std::string& s, const zinbiel::Alphabet& a = xyz()) { return zinbiel::parse_word(s, a); }
inline zinbiel::MagmaPoly P(const std::string& s, const zinbiel::Alphabet& a = xyz()) {
  return zinbiel::parse_poly(s, a);
}
inline std::string S(const zinbiel::MagmaPoly& p, const zinbiel::Alphabet& a = xyz()) {
  return zinbiel::format_poly(p, a);
}
inline zinbiel::Rational Q(long p, long q = 1) {
  zinbiel::Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Random tree with `length` leaves over the first `letters` ranks.
inline zinbiel::Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t length) {
  if (length == 1) {
    return zinbiel::Word::leaf(static_cast<zinbiel::Rank>(std::uniform_int_distribution<std::size_t>(0, letters - 1)(rng)));
  }
  std::size_t left = std::uniform_int_distribution<std::size_t>(1, length - 1)(rng);
  return zinbiel::Word::node(random_word(rng, letters, left), random_word(rng, letters, length - left));
}

inline zinbiel::MagmaPoly random_poly(std::mt19937_64& rng, std::size_t letters, std::size_t max_length,
                                      std::size_t terms) {
  zinbiel::MagmaPoly p;
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (std::size_t t = 0; t < terms; ++t) p.add_term(random_word(rng, letters, len(rng)), coef(rng));
  return p;
}

}  // namespace testing
