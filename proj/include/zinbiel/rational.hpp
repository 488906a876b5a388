#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace zinbiel {

/// Exact rational coefficient. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// p/q in lowest terms. The two-argument mpq_class constructor does not reduce.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q". Throws Error on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// Formats as "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

}  // namespace zinbiel
