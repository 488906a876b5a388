#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zinbiel/magma_poly.hpp"
#include "zinbiel/relations.hpp"
#include "zinbiel/zinbiel_free.hpp"

namespace zinbiel {

/// Input error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class Bracket { Round, Square };

/// Untyped S-expression: an atom or a bracketed list.
struct SExpr {
  bool is_atom = false;
  std::string atom;
  Bracket bracket = Bracket::Round;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// All top-level forms; `;` starts a comment running to the end of the line.
std::vector<SExpr> parse_sexprs(std::string_view text);
/// Exactly one form.
SExpr parse_sexpr(std::string_view text);

/// Letters: identifiers starting with a letter or '_', followed by letters,
/// digits, '_' or '\''.
bool is_identifier(std::string_view name);
/// Letter names occurring in word positions, in order of first appearance.
std::vector<std::string> collect_letters(const SExpr& expr);
/// Sorts names so that a common prefix is followed by numeric order (x2 < x10).
void natural_sort(std::vector<std::string>& names);

/// Words: `x`, `(x (y z))`.
Word word_from_sexpr(const SExpr& expr, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Polynomials: `0`, a word, `(* p/q word)` or `(+ term ...)`.
MagmaPoly poly_from_sexpr(const SExpr& expr, const Alphabet& alphabet);
MagmaPoly parse_poly(std::string_view text, const Alphabet& alphabet);
/// Terms in descending order; a lone term is printed without the (+ ...) wrapper.
std::string format_poly(const MagmaPoly& p, const Alphabet& alphabet);

/// Zinbiel elements use `[x y z]` for the left comb of x y z.
ZinbElement zinb_from_sexpr(const SExpr& expr, const Alphabet& alphabet);
ZinbElement parse_zinb(std::string_view text, const Alphabet& alphabet);
std::string format_zinb(const ZinbElement& z, const Alphabet& alphabet);

/// Relation file: `(alphabet x y ...)` at most once, `(family R1|R3|R3')`, and
/// polynomials, which become monic explicit relations labelled r1, r2, ...
/// Without an alphabet form the letters of the file and of `extra_letters`
/// are used in natural order.
struct RelationFile {
  Alphabet alphabet;
  std::vector<RelationSchema> schemas;
};
RelationFile parse_relation_file(std::string_view text, const std::vector<std::string>& extra_letters = {});
std::string format_relation_file(const RelationFile& file);

/// The family registered under a label (R1, R3, R3'); throws Error otherwise.
RelationSchema family_by_label(std::string_view label);

}  // namespace zinbiel
