#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zinbiel/magma_poly.hpp"

namespace zinbiel {

/// Produces the monic instance of a relation family whose leading monomial is
/// exactly the given word, or nothing when the word is not such a leading monomial.
using FamilyMatcher = std::function<std::optional<MagmaPoly>(WordView)>;

/// Either one explicit monic relation or a (possibly infinite) family of monic
/// relations that is instantiated lazily, one leading monomial at a time.
class RelationSchema {
 public:
  /// Normalises `p` to monic form. Throws Error on the zero polynomial.
  static RelationSchema explicit_relation(const MagmaPoly& p, std::string label = {});
  static RelationSchema family(std::string label, FamilyMatcher matcher);

  bool is_family() const { return static_cast<bool>(matcher_); }
  const std::string& label() const { return label_; }

  /// Explicit relations only.
  const MagmaPoly& poly() const;
  const Word& leading() const { return poly().leading(); }

  /// The instance whose leading monomial is `w`. Family matchers that return a
  /// non-monic polynomial or the wrong leading monomial raise Error.
  std::optional<MagmaPoly> instance_at(WordView w) const;

 private:
  std::string label_;
  std::optional<MagmaPoly> poly_;
  FamilyMatcher matcher_;
};

/// a(bc) - (ab)c - (ba)c for all words a, b, c.
RelationSchema zinbiel_family();

struct Instance {
  std::size_t schema = 0;
  MagmaPoly poly;
};

/// A list of schemas with explicit relations indexed by leading monomial.
class RelationSet {
 public:
  RelationSet() = default;
  explicit RelationSet(std::vector<RelationSchema> schemas);

  void add(RelationSchema schema);
  const std::vector<RelationSchema>& schemas() const { return schemas_; }
  std::size_t size() const { return schemas_.size(); }

  /// Instance from the lowest-indexed schema whose leading monomial is `w`.
  std::optional<Instance> first_match(WordView w) const;
  std::vector<Instance> all_matches(WordView w) const;
  bool matches(WordView w) const;

 private:
  std::vector<RelationSchema> schemas_;
  std::map<Word, std::vector<std::size_t>, WordLess> explicit_by_leading_;
  std::vector<std::size_t> families_;
};

}  // namespace zinbiel
