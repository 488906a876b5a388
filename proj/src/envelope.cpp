#include "zinbiel/envelope.hpp"

#include <algorithm>

namespace zinbiel {

namespace {

MagmaPoly as_generators(const Vector& v) {
  MagmaPoly p;
  for (std::size_t k = 0; k < v.size(); ++k) p.add_term(Word::leaf(static_cast<Rank>(k)), v[k]);
  return p;
}

Word pair(Rank i, Rank j) { return Word::node(Word::leaf(i), Word::leaf(j)); }

bool even_left_comb(WordView a) { return a.length() % 2 == 0 && a.is_left_combed(); }

}  // namespace

EnvelopePresentation enveloping_relations(const CommAlgebra& algebra) {
  EnvelopePresentation out{algebra.basis(), {zinbiel_family()}};
  const auto d = static_cast<Rank>(algebra.dimension());
  for (Rank i = 0; i < d; ++i) {
    for (Rank j = i; j < d; ++j) {
      MagmaPoly rel(pair(i, j));
      rel.add_term(pair(j, i), 1);
      rel -= as_generators(algebra.product(i, j));
      auto [lead, monic] = leading_and_monic(rel);
      // Length-2 words outrank every letter, so the leading monomial is x_i x_j.
      if (!(lead == pair(i, j))) throw Error("envelope relation has an unexpected leading monomial");
      const auto& names = algebra.basis();
      out.schemas.push_back(RelationSchema::explicit_relation(monic, "env[" + names.name(i) + "," + names.name(j) + "]"));
    }
  }
  return out;
}

RelationSchema anticommuting_tail_family() {
  return RelationSchema::family("R3", [](WordView w) -> std::optional<MagmaPoly> {
    if (w.is_leaf() || !w.right().is_leaf() || w.left().is_leaf()) return std::nullopt;
    WordView ax = w.left();
    if (!ax.right().is_leaf() || !even_left_comb(ax.left())) return std::nullopt;
    const Rank x = ax.right().letter();
    const Rank y = w.right().letter();
    if (!(x < y)) return std::nullopt;
    Word a(ax.left());
    MagmaPoly f{Word(w)};
    f.add_term(Word::node(Word::node(a, Word::leaf(y)), Word::leaf(x)), 1);
    return f;
  });
}

RelationSchema square_tail_family() {
  return RelationSchema::family("R3'", [](WordView w) -> std::optional<MagmaPoly> {
    if (w.is_leaf() || !w.right().is_leaf() || w.left().is_leaf()) return std::nullopt;
    WordView ax = w.left();
    if (!ax.right().is_leaf() || !even_left_comb(ax.left())) return std::nullopt;
    if (ax.right().letter() != w.right().letter()) return std::nullopt;
    return MagmaPoly(Word(w));
  });
}

std::vector<RelationSchema> trivial_gsb(std::size_t alphabet_size) {
  if (alphabet_size == 0) throw Error("alphabet must be nonempty");
  const Alphabet names = Alphabet::standard(alphabet_size);
  std::vector<RelationSchema> out{zinbiel_family()};
  const auto d = static_cast<Rank>(alphabet_size);
  for (Rank x = 0; x < d; ++x) {
    for (Rank y = x + 1; y < d; ++y) {
      MagmaPoly g(pair(x, y));
      g.add_term(pair(y, x), 1);
      out.push_back(RelationSchema::explicit_relation(g, "R2[" + names.name(x) + "," + names.name(y) + "]"));
    }
  }
  for (Rank x = 0; x < d; ++x) {
    out.push_back(RelationSchema::explicit_relation(MagmaPoly(pair(x, x)), "R2'[" + names.name(x) + "]"));
  }
  out.push_back(anticommuting_tail_family());
  out.push_back(square_tail_family());
  return out;
}

std::uint64_t corollary_count(std::uint64_t d, std::uint64_t n) {
  if (d < 1 || n < 1) throw Error("corollary_count needs d >= 1 and n >= 1");
  const std::uint64_t pairs = d * (d - 1) / 2;
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < n / 2; ++k) {
    if (__builtin_mul_overflow(out, pairs, &out)) throw Error("corollary_count overflows 64 bits");
  }
  if (n % 2 == 1 && __builtin_mul_overflow(out, d, &out)) throw Error("corollary_count overflows 64 bits");
  return out;
}

std::vector<RelationSchema> truncated_poly_relations(std::size_t n) {
  if (n < 1) throw Error("truncated polynomial example needs n >= 1");
  std::vector<RelationSchema> out{zinbiel_family()};
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      MagmaPoly rel(pair(static_cast<Rank>(i - 1), static_cast<Rank>(j - 1)));
      if (i + j <= n) {
        rel.add_term(Word::leaf(static_cast<Rank>(i + j - 1)),
                     -ratio(static_cast<long>(j), static_cast<long>(i + j)));
      }
      out.push_back(RelationSchema::explicit_relation(
          rel, "x" + std::to_string(i) + "x" + std::to_string(j)));
    }
  }
  return out;
}

GsbReport verify_thm2(std::size_t alphabet_size, std::size_t bound) {
  return verify_gsb({zinbiel_family()}, alphabet_size, bound);
}

Thm1Report verify_thm1(std::size_t alphabet_size, std::size_t bound) {
  Thm1Report r;
  auto gsb = trivial_gsb(alphabet_size);
  r.gsb = verify_gsb(gsb, alphabet_size, bound);
  r.counts = irreducible_counts(gsb, alphabet_size, bound);
  for (std::size_t n = 1; n <= bound; ++n) r.expected_counts.push_back(corollary_count(alphabet_size, n));
  r.counts_match = std::equal(r.counts.begin(), r.counts.end(), r.expected_counts.begin(), r.expected_counts.end());

  auto envelope = enveloping_relations(CommAlgebra::trivial(alphabet_size));
  auto completed = complete(envelope.schemas, alphabet_size, bound);
  r.completion_added = completed.added;
  r.completion_counts = irreducible_counts(completed.relations, alphabet_size, bound);
  r.completion_matches = completed.report.verified() && r.completion_counts == r.counts;
  return r;
}

CollapseReport collapse_check(const CommAlgebra& algebra, std::size_t bound) {
  CollapseReport r;
  const std::size_t d = algebra.dimension();
  auto envelope = enveloping_relations(algebra);
  auto completed = complete(envelope.schemas, d, bound);
  r.completion_added = completed.added;
  r.report = std::move(completed.report);
  r.completed = interreduce(completed.relations, bound);
  r.counts = irreducible_counts(r.completed, d, bound);
  r.generators_independent = !r.counts.empty() && r.counts.front() == d;

  Reducer reducer(RelationSet(r.completed), bound);
  r.star_table_matches = true;
  for (Rank i = 0; i < d; ++i) {
    for (Rank j = i; j < d; ++j) {
      MagmaPoly anti(pair(i, j));
      anti.add_term(pair(j, i), 1);
      StarEntry e{i, j, reducer.normal_form(anti), reducer.normal_form(as_generators(algebra.product(i, j)))};
      if (!(e.induced == e.expected)) r.star_table_matches = false;
      r.star_table.push_back(std::move(e));
    }
  }
  return r;
}

bool TruncPolyReport::passed() const {
  if (!missing.empty() || !unexpected.empty()) return false;
  if (!collapse.star_table_matches || !collapse.generators_independent) return false;
  return std::all_of(collapse.counts.begin() + 1, collapse.counts.end(), [](std::size_t c) { return c == 0; });
}

TruncPolyReport truncpoly_check(std::size_t n, std::size_t bound) {
  TruncPolyReport r;
  r.collapse = collapse_check(CommAlgebra::truncated_polynomial(n), bound);
  auto explicit_polys = [](const std::vector<RelationSchema>& schemas) {
    std::vector<MagmaPoly> out;
    for (const auto& s : schemas) {
      if (!s.is_family()) out.push_back(s.poly());
    }
    return out;
  };
  auto expected = explicit_polys(truncated_poly_relations(n));
  auto produced = explicit_polys(r.collapse.completed);
  auto contains = [](const std::vector<MagmaPoly>& v, const MagmaPoly& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  };
  for (const auto& p : expected) {
    if (!contains(produced, p)) r.missing.push_back(p);
  }
  for (const auto& p : produced) {
    if (!contains(expected, p)) r.unexpected.push_back(p);
  }
  return r;
}

std::vector<Word> left_combs(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> out;
  if (length == 0 || alphabet_size == 0) return out;
  AWord letters(length, 0);
  for (;;) {
    out.push_back(bracket(letters, Bracketing::Left));
    std::size_t k = length;
    while (k > 0 && letters[k - 1] + 1 == alphabet_size) letters[--k] = 0;
    if (k == 0) break;
    ++letters[k - 1];
  }
  return out;
}

LemmaReport lemma_odd_even_check(std::size_t alphabet_size, std::size_t m_max, std::size_t k_max) {
  if (m_max < 1 || m_max % 2 == 0) throw Error("m_max must be odd and >= 1");
  if (k_max < 2 || k_max % 2 == 1) throw Error("k_max must be even and >= 2");
  LemmaReport r;
  Reducer reducer(RelationSet(trivial_gsb(alphabet_size)), m_max + k_max);
  for (std::size_t m = 1; m <= m_max; m += 2) {
    for (const Word& a : left_combs(alphabet_size, m)) {
      for (std::size_t k = 2; k <= k_max; k += 2) {
        for (const Word& b : left_combs(alphabet_size, k)) {
          ++r.pairs_checked;
          MagmaPoly nf = reducer.normal_form(MagmaPoly(Word::node(a, b)));
          if (!nf.is_zero()) r.violations.push_back({a, b, std::move(nf)});
        }
      }
    }
  }
  return r;
}

}  // namespace zinbiel
