#include "zinbiel/relations.hpp"

#include <algorithm>

namespace zinbiel {

RelationSchema RelationSchema::explicit_relation(const MagmaPoly& p, std::string label) {
  if (p.is_zero()) throw Error("a relation must be a nonzero polynomial");
  RelationSchema s;
  s.label_ = std::move(label);
  s.poly_ = p.monic();
  return s;
}

RelationSchema RelationSchema::family(std::string label, FamilyMatcher matcher) {
  if (!matcher) throw Error("relation family '" + label + "' has no matcher");
  RelationSchema s;
  s.label_ = std::move(label);
  s.matcher_ = std::move(matcher);
  return s;
}

const MagmaPoly& RelationSchema::poly() const {
  if (!poly_) throw Error("relation family '" + label_ + "' has no single polynomial");
  return *poly_;
}

std::optional<MagmaPoly> RelationSchema::instance_at(WordView w) const {
  if (!matcher_) {
    if (poly_->leading().view() == w) return poly_;
    return std::nullopt;
  }
  auto inst = matcher_(w);
  if (inst && (!inst->is_monic() || !(inst->leading().view() == w))) {
    throw Error("relation family '" + label_ + "' produced an instance with a wrong leading monomial");
  }
  return inst;
}

RelationSchema zinbiel_family() {
  return RelationSchema::family("R1", [](WordView w) -> std::optional<MagmaPoly> {
    if (w.is_leaf() || w.right().is_leaf()) return std::nullopt;
    Word a(w.left());
    Word b(w.right().left());
    Word c(w.right().right());
    MagmaPoly f{Word(w)};
    f.add_term(Word::node(Word::node(a, b), c), -1);
    f.add_term(Word::node(Word::node(b, a), c), -1);
    return f;
  });
}

RelationSet::RelationSet(std::vector<RelationSchema> schemas) {
  for (auto& s : schemas) add(std::move(s));
}

void RelationSet::add(RelationSchema schema) {
  const std::size_t index = schemas_.size();
  if (schema.is_family()) {
    families_.push_back(index);
  } else {
    explicit_by_leading_[schema.leading()].push_back(index);
  }
  schemas_.push_back(std::move(schema));
}

std::optional<Instance> RelationSet::first_match(WordView w) const {
  std::optional<Instance> best;
  if (auto it = explicit_by_leading_.find(w); it != explicit_by_leading_.end()) {
    best = Instance{it->second.front(), schemas_[it->second.front()].poly()};
  }
  for (std::size_t i : families_) {
    if (best && i > best->schema) break;
    if (auto inst = schemas_[i].instance_at(w)) return Instance{i, std::move(*inst)};
  }
  return best;
}

std::vector<Instance> RelationSet::all_matches(WordView w) const {
  std::vector<Instance> out;
  if (auto it = explicit_by_leading_.find(w); it != explicit_by_leading_.end()) {
    for (std::size_t i : it->second) out.push_back({i, schemas_[i].poly()});
  }
  for (std::size_t i : families_) {
    if (auto inst = schemas_[i].instance_at(w)) out.push_back({i, std::move(*inst)});
  }
  std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) { return a.schema < b.schema; });
  return out;
}

bool RelationSet::matches(WordView w) const {
  if (explicit_by_leading_.contains(w)) return true;
  for (std::size_t i : families_) {
    if (schemas_[i].instance_at(w)) return true;
  }
  return false;
}

}  // namespace zinbiel
