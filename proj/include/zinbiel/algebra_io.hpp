#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/comm_algebra.hpp"

namespace zinbiel {

/// Commutative algebra description:
///   {"basis": ["x1", "x2"], "levels": [1, 2], "products": ["x1 x1 -> x2"]}
/// Products are `a b -> c1 n1 + c2 n2 ...` with rational coefficients
/// ("1/2 x2", "-x3"); `a b -> 0` is allowed and unlisted products are zero.
/// `levels` is optional.
struct AlgebraFile {
  CommAlgebra algebra{Alphabet{}};
  std::optional<std::vector<std::uint32_t>> levels;

  bool operator==(const AlgebraFile&) const = default;
};

/// Throws ParseError with the line and column of the offending text.
AlgebraFile parse_algebra_json(std::string_view text);
/// Pretty-printed; products listed for a <= b in basis order, nonzero only.
std::string format_algebra_json(const AlgebraFile& file);

}  // namespace zinbiel
