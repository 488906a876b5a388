#pragma once

#include <vector>

#include "zinbiel/reduction.hpp"

namespace zinbiel {

/// (f, g)_u = f - u|_{* = g} for one occurrence of leading(g) inside leading(f).
struct InclusionComposition {
  Word ambiguity;
  TreePath path;
  MagmaPoly value;
};

/// One entry per occurrence of leading(g) in leading(f); the root occurrence is
/// skipped only when f == g.
std::vector<InclusionComposition> inclusion_compositions(const MagmaPoly& f, const MagmaPoly& g);

struct CompositionFailure {
  std::size_t f_schema = 0;
  std::size_t g_schema = 0;
  MagmaPoly f;
  MagmaPoly g;
  Word ambiguity;
  TreePath path;
  MagmaPoly normal_form;
};

struct GsbReport {
  std::size_t ambiguities_checked = 0;
  std::size_t instances = 0;
  std::size_t instantiation_bound = 0;
  std::vector<CompositionFailure> failures;

  bool verified() const { return failures.empty(); }
};

/// Checks every inclusion composition whose ambiguity has length <= bound.
GsbReport verify_gsb(const std::vector<RelationSchema>& relations, std::size_t alphabet_size, std::size_t bound);

struct CompletionResult {
  std::vector<RelationSchema> relations;
  std::size_t added = 0;
  std::size_t rounds = 0;
  /// Verification of the final set at the completion bound.
  GsbReport report;
};

/// Shirshov completion restricted to ambiguities of length <= bound. Input
/// schemas keep their positions; new monic relations are appended in the order
/// compositions are processed: by ambiguity, then by the creation indices of f and g.
CompletionResult complete(const std::vector<RelationSchema>& relations, std::size_t alphabet_size,
                          std::size_t bound);

/// Drops explicit relations whose leading monomial is reducible by the others
/// (when they reduce to zero modulo the rest) and reduces the tails of the
/// remaining explicit relations. Families are kept as they are.
std::vector<RelationSchema> interreduce(const std::vector<RelationSchema>& relations, std::size_t bound);

/// Words of length 1..max_len with no instance leading monomial as a subtree;
/// element i holds the words of length i + 1 in ascending order.
std::vector<std::vector<Word>> irreducible_words(const std::vector<RelationSchema>& relations,
                                                 std::size_t alphabet_size, std::size_t max_len);

std::vector<std::size_t> irreducible_counts(const std::vector<RelationSchema>& relations,
                                            std::size_t alphabet_size, std::size_t max_len);

}  // namespace zinbiel
