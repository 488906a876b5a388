#include "zinbiel/gsb.hpp"

#include <algorithm>
#include <tuple>

namespace zinbiel {

std::vector<InclusionComposition> inclusion_compositions(const MagmaPoly& f, const MagmaPoly& g) {
  std::vector<InclusionComposition> out;
  const Word& w = f.leading();
  for (auto& path : occurrences(w, g.leading())) {
    if (path.empty() && f == g) continue;
    out.push_back({w, path, f - substitute(w, path, g)});
  }
  return out;
}

namespace {

struct PendingComposition {
  Word ambiguity;
  std::size_t f_schema;
  std::size_t g_schema;
  TreePath path;
  MagmaPoly f;
  MagmaPoly g;
};

template <class Visit>
void visit_paths(WordView w, TreePath& path, Visit&& visit) {
  visit(w, path);
  if (w.is_leaf()) return;
  path.push_back(Side::Left);
  visit_paths(w.left(), path, visit);
  path.back() = Side::Right;
  visit_paths(w.right(), path, visit);
  path.pop_back();
}

// Compositions with ambiguity length <= bound, in processing order. Pairs in
// which both schema indices are below `first_new` are skipped: they were
// already found trivial and stay trivial when relations are added.
std::vector<PendingComposition> pending_compositions(const RelationSet& set, std::size_t alphabet_size,
                                                     std::size_t bound, std::size_t first_new,
                                                     std::size_t* instance_count) {
  std::vector<PendingComposition> out;
  std::size_t instances = 0;
  for (std::size_t n = 1; n <= bound; ++n) {
    for (const Word& w : all_words(alphabet_size, n)) {
      auto fs = set.all_matches(w.view());
      if (fs.empty()) continue;
      instances += fs.size();
      TreePath path;
      visit_paths(w.view(), path, [&](WordView sub, const TreePath& p) {
        auto gs = set.all_matches(sub);
        for (const auto& f : fs) {
          for (const auto& g : gs) {
            if (f.schema < first_new && g.schema < first_new) continue;
            if (p.empty() && (f.schema == g.schema || f.poly == g.poly)) continue;
            out.push_back({w, f.schema, g.schema, p, f.poly, g.poly});
          }
        }
      });
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PendingComposition& a, const PendingComposition& b) {
    return std::tie(a.ambiguity, a.f_schema, a.g_schema, a.path) <
           std::tie(b.ambiguity, b.f_schema, b.g_schema, b.path);
  });
  if (instance_count) *instance_count = instances;
  return out;
}

MagmaPoly composition_value(const PendingComposition& c) {
  return c.f - substitute(c.ambiguity, c.path, c.g);
}

}  // namespace

GsbReport verify_gsb(const std::vector<RelationSchema>& relations, std::size_t alphabet_size, std::size_t bound) {
  if (bound < 1) throw Error("verification bound must be positive");
  GsbReport report;
  report.instantiation_bound = bound;
  Reducer reducer(RelationSet(relations), bound);
  auto pending = pending_compositions(reducer.relations(), alphabet_size, bound, 0, &report.instances);
  for (const auto& c : pending) {
    ++report.ambiguities_checked;
    MagmaPoly nf = reducer.normal_form(composition_value(c));
    if (!nf.is_zero()) report.failures.push_back({c.f_schema, c.g_schema, c.f, c.g, c.ambiguity, c.path, nf});
  }
  return report;
}

CompletionResult complete(const std::vector<RelationSchema>& relations, std::size_t alphabet_size,
                          std::size_t bound) {
  if (bound < 1) throw Error("completion bound must be positive");
  CompletionResult result;
  Reducer reducer(RelationSet(relations), bound);
  std::size_t first_new = 0;
  for (;;) {
    ++result.rounds;
    const std::size_t round_start = reducer.relations().size();
    auto pending = pending_compositions(reducer.relations(), alphabet_size, bound, first_new, nullptr);
    for (const auto& c : pending) {
      MagmaPoly nf = reducer.normal_form(composition_value(c));
      if (nf.is_zero()) continue;
      reducer.add(RelationSchema::explicit_relation(nf, "C" + std::to_string(++result.added)));
    }
    if (reducer.relations().size() == round_start) break;
    first_new = round_start;
  }
  result.relations = reducer.relations().schemas();
  result.report = verify_gsb(result.relations, alphabet_size, bound);
  return result;
}

std::vector<RelationSchema> interreduce(const std::vector<RelationSchema>& relations, std::size_t bound) {
  std::vector<RelationSchema> kept = relations;
  // Remove redundant explicit relations, latest first, so earlier ones win ties.
  for (std::size_t i = kept.size(); i-- > 0;) {
    if (kept[i].is_family()) continue;
    std::vector<RelationSchema> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    RelationSet other_set(others);
    const Word& lead = kept[i].leading();
    bool reducible = false;
    TreePath path;
    visit_paths(lead.view(), path, [&](WordView sub, const TreePath&) {
      if (!reducible && other_set.matches(sub)) reducible = true;
    });
    if (!reducible) continue;
    Reducer r(std::move(other_set), bound);
    if (r.normal_form(kept[i].poly()).is_zero()) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  // Tail reduction.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i].is_family()) continue;
    std::vector<RelationSchema> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    Reducer r(RelationSet(others), bound);
    const MagmaPoly& f = kept[i].poly();
    MagmaPoly tail = f - MagmaPoly(f.leading());
    MagmaPoly reduced = MagmaPoly(f.leading()) + r.normal_form(tail);
    kept[i] = RelationSchema::explicit_relation(reduced, kept[i].label());
  }
  return kept;
}

std::vector<std::vector<Word>> irreducible_words(const std::vector<RelationSchema>& relations,
                                                 std::size_t alphabet_size, std::size_t max_len) {
  if (max_len < 1) throw Error("max_len must be at least 1");
  RelationSet set(relations);
  std::vector<std::vector<Word>> by_length(max_len);
  for (Rank r = 0; r < alphabet_size; ++r) {
    Word w = Word::leaf(r);
    if (!set.matches(w.view())) by_length[0].push_back(w);
  }
  // Every subtree of an irreducible word is irreducible, so only roots need checking.
  for (std::size_t n = 2; n <= max_len; ++n) {
    auto& out = by_length[n - 1];
    for (std::size_t k = 1; k < n; ++k) {
      for (const auto& u : by_length[k - 1]) {
        for (const auto& v : by_length[n - k - 1]) {
          Word w = Word::node(u, v);
          if (!set.matches(w.view())) out.push_back(std::move(w));
        }
      }
    }
    std::sort(out.begin(), out.end());
  }
  return by_length;
}

std::vector<std::size_t> irreducible_counts(const std::vector<RelationSchema>& relations,
                                            std::size_t alphabet_size, std::size_t max_len) {
  std::vector<std::size_t> counts;
  for (const auto& words : irreducible_words(relations, alphabet_size, max_len)) counts.push_back(words.size());
  return counts;
}

}  // namespace zinbiel
