#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "zinbiel/relations.hpp"

namespace zinbiel {

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Every path at which `pattern` occurs as a subtree of `w`, in pre-order with
/// the left branch first (the root comes first when w == pattern).
std::vector<TreePath> occurrences(const Word& w, const Word& pattern);

/// The linear extension of grafting: each monomial of `replacement` is put at
/// `path` in `w`, keeping its coefficient.
MagmaPoly substitute(const Word& w, const TreePath& path, const MagmaPoly& replacement);

/// Which reducible subtree of a monomial to rewrite (pre-order position).
enum class OccurrenceChoice { Leftmost, Rightmost };
/// Which reducible monomial of a polynomial to rewrite next.
enum class MonomialChoice { Largest, Smallest };

/// One rewrite: subtracts coefficient * context|_{path = relation} from the
/// polynomial being reduced. The subtree of `context` at `path` is the leading
/// monomial of `relation`.
struct RewriteStep {
  Rational coefficient;
  Word context;
  TreePath path;
  MagmaPoly relation;
  std::size_t schema = 0;
};

/// Normal forms modulo a relation set whose instances are used only up to a
/// length bound. Normal forms of monomials are memoised; adding a relation
/// drops the memo.
class Reducer {
 public:
  Reducer(RelationSet relations, std::size_t bound);

  const RelationSet& relations() const { return relations_; }
  std::size_t bound() const { return bound_; }
  void add(RelationSchema schema);

  /// Leading monomial first, leftmost occurrence within a monomial.
  MagmaPoly normal_form(const MagmaPoly& p);
  MagmaPoly normal_form(const Word& w);

  bool is_reducible(const Word& w) const;

  /// Memo-free reduction with an explicit strategy. When `trace` is given, the
  /// steps satisfy p - result = sum of coefficient * substitute(context, path, relation).
  MagmaPoly reduce(const MagmaPoly& p, MonomialChoice monomials, OccurrenceChoice occurrence,
                   std::vector<RewriteStep>* trace = nullptr) const;

 private:
  struct Match {
    TreePath path;
    Instance instance;
  };
  std::optional<Match> find_match(const Word& w, OccurrenceChoice choice) const;
  const MagmaPoly& monomial_normal_form(const Word& w);

  RelationSet relations_;
  std::size_t bound_;
  std::unordered_map<Word, MagmaPoly, WordHash> memo_;
};

/// One-shot convenience wrapper around Reducer.
MagmaPoly normal_form(const MagmaPoly& p, const std::vector<RelationSchema>& relations, std::size_t bound);

}  // namespace zinbiel
