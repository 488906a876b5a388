#include "zinbiel/reduction.hpp"

namespace zinbiel {

namespace {

void collect_occurrences(WordView w, WordView pattern, std::size_t pattern_length, TreePath& path,
                         std::vector<TreePath>& out) {
  if (w.length() < pattern_length) return;
  if (w.length() == pattern_length) {
    if (w == pattern) out.push_back(path);
    return;
  }
  path.push_back(Side::Left);
  collect_occurrences(w.left(), pattern, pattern_length, path, out);
  path.back() = Side::Right;
  collect_occurrences(w.right(), pattern, pattern_length, path, out);
  path.pop_back();
}

template <class Visit>
bool visit_subtrees(WordView w, TreePath& path, Visit&& visit) {
  if (visit(w, path)) return true;
  if (w.is_leaf()) return false;
  path.push_back(Side::Left);
  if (visit_subtrees(w.left(), path, visit)) return true;
  path.back() = Side::Right;
  if (visit_subtrees(w.right(), path, visit)) return true;
  path.pop_back();
  return false;
}

}  // namespace

std::vector<TreePath> occurrences(const Word& w, const Word& pattern) {
  std::vector<TreePath> out;
  TreePath path;
  collect_occurrences(w.view(), pattern.view(), pattern.length(), path, out);
  return out;
}

MagmaPoly substitute(const Word& w, const TreePath& path, const MagmaPoly& replacement) {
  w.at(path);  // validates the path
  MagmaPoly out;
  for (const auto& [m, c] : replacement.terms()) out.add_term(w.graft(path, m), c);
  return out;
}

Reducer::Reducer(RelationSet relations, std::size_t bound) : relations_(std::move(relations)), bound_(bound) {}

void Reducer::add(RelationSchema schema) {
  relations_.add(std::move(schema));
  memo_.clear();
}

std::optional<Reducer::Match> Reducer::find_match(const Word& w, OccurrenceChoice choice) const {
  if (w.length() > bound_) {
    throw BoundExceeded("instantiation bound exceeded: monomial of length " + std::to_string(w.length()) +
                        " with bound " + std::to_string(bound_));
  }
  std::optional<Match> found;
  TreePath path;
  visit_subtrees(w.view(), path, [&](WordView sub, const TreePath& p) {
    if (auto inst = relations_.first_match(sub)) {
      found = Match{p, std::move(*inst)};
      return choice == OccurrenceChoice::Leftmost;
    }
    return false;
  });
  return found;
}

bool Reducer::is_reducible(const Word& w) const { return find_match(w, OccurrenceChoice::Leftmost).has_value(); }

const MagmaPoly& Reducer::monomial_normal_form(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  MagmaPoly result;
  if (auto match = find_match(w, OccurrenceChoice::Leftmost)) {
    MagmaPoly rest = MagmaPoly(w) - substitute(w, match->path, match->instance.poly);
    for (const auto& [m, c] : rest.terms()) {
      MagmaPoly nf = monomial_normal_form(m);
      result += nf * c;
    }
  } else {
    result = MagmaPoly(w);
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

MagmaPoly Reducer::normal_form(const Word& w) { return monomial_normal_form(w); }

MagmaPoly Reducer::normal_form(const MagmaPoly& p) {
  MagmaPoly out;
  for (const auto& [m, c] : p.terms()) {
    MagmaPoly nf = monomial_normal_form(m);
    out += nf * c;
  }
  return out;
}

MagmaPoly Reducer::reduce(const MagmaPoly& p, MonomialChoice monomials, OccurrenceChoice occurrence,
                          std::vector<RewriteStep>* trace) const {
  MagmaPoly work = p;
  MagmaPoly result;
  while (!work.is_zero()) {
    const auto& entry = monomials == MonomialChoice::Largest ? *work.terms().begin() : *work.terms().rbegin();
    Word m = entry.first;
    Rational c = entry.second;
    auto match = find_match(m, occurrence);
    if (!match) {
      result.add_term(m, c);
      work.add_term(m, -c);
      continue;
    }
    MagmaPoly step = substitute(m, match->path, match->instance.poly);
    work -= step * c;
    if (trace) trace->push_back({c, m, match->path, match->instance.poly, match->instance.schema});
  }
  return result;
}

MagmaPoly normal_form(const MagmaPoly& p, const std::vector<RelationSchema>& relations, std::size_t bound) {
  Reducer r(RelationSet(relations), bound);
  return r.normal_form(p);
}

}  // namespace zinbiel
