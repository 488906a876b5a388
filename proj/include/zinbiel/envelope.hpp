#pragma once

#include <cstdint>
#include <vector>

#include "zinbiel/comm_algebra.hpp"
#include "zinbiel/gsb.hpp"

namespace zinbiel {

/// Defining relations of the universal pre-commutative envelope of A: the
/// Zinbiel family plus, for every basis pair x <= y, xy + yx - x*y in monic form.
struct EnvelopePresentation {
  Alphabet alphabet;
  std::vector<RelationSchema> schemas;
};

EnvelopePresentation enveloping_relations(const CommAlgebra& algebra);

/// (ax)y + (ay)x for letters x < y and left-combed a of even length.
RelationSchema anticommuting_tail_family();
/// (ax)x for a letter x and left-combed a of even length.
RelationSchema square_tail_family();

/// Gröbner–Shirshov basis of the envelope of a zero-product algebra:
/// Zinbiel family, xy + yx (x < y), xx, and the two tail families.
std::vector<RelationSchema> trivial_gsb(std::size_t alphabet_size);

/// Number of left combs [z1, ..., zn] with z1 > z2, z3 > z4, ... over d letters:
/// C(d,2)^(n/2) * d^(n mod 2). Throws Error on 64-bit overflow.
std::uint64_t corollary_count(std::uint64_t d, std::uint64_t n);

/// Zinbiel family plus x_i x_j - j/(i+j) x_{i+j} (i+j <= n) and x_i x_j
/// (i+j > n) for all ordered pairs, over the letters x1 < ... < xn.
std::vector<RelationSchema> truncated_poly_relations(std::size_t n);

GsbReport verify_thm2(std::size_t alphabet_size, std::size_t bound);

struct Thm1Report {
  GsbReport gsb;
  std::vector<std::size_t> counts;
  std::vector<std::uint64_t> expected_counts;
  std::vector<std::size_t> completion_counts;
  std::size_t completion_added = 0;
  bool counts_match = false;
  bool completion_matches = false;
  bool passed() const { return gsb.verified() && counts_match && completion_matches; }
};

/// GSB check of trivial_gsb, irreducible counts against corollary_count, and
/// bounded completion of the plain envelope relations reaching the same counts.
Thm1Report verify_thm1(std::size_t alphabet_size, std::size_t bound);

struct StarEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  MagmaPoly induced;   // normal form of x_i x_j + x_j x_i
  MagmaPoly expected;  // normal form of x_i * x_j written in the generators
};

struct CollapseReport {
  std::vector<RelationSchema> completed;  // interreduced
  std::size_t completion_added = 0;
  std::vector<std::size_t> counts;
  std::vector<StarEntry> star_table;
  bool star_table_matches = false;
  bool generators_independent = false;
  GsbReport report;
};

/// Completes the envelope relations of A to the bound and describes the
/// resulting quotient: irreducible counts and the induced anti-commutator table.
CollapseReport collapse_check(const CommAlgebra& algebra, std::size_t bound);

struct TruncPolyReport {
  CollapseReport collapse;
  std::vector<MagmaPoly> missing;     // expected but not produced
  std::vector<MagmaPoly> unexpected;  // produced but not expected
  bool passed() const;
};
/// collapse_check on t k[t]/(t^{n+1}), comparing the explicit completed
/// relations with truncated_poly_relations(n) as sets of monic polynomials.
TruncPolyReport truncpoly_check(std::size_t n, std::size_t bound);

struct LemmaViolation {
  Word a;
  Word b;
  MagmaPoly normal_form;
};

struct LemmaReport {
  std::size_t pairs_checked = 0;
  std::vector<LemmaViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For all left combs a of odd length <= m_max and b of even length in
/// [2, k_max], the product ab reduces to zero modulo trivial_gsb.
LemmaReport lemma_odd_even_check(std::size_t alphabet_size, std::size_t m_max, std::size_t k_max);

/// All left combs of exactly `length` letters over the first `alphabet_size` ranks.
std::vector<Word> left_combs(std::size_t alphabet_size, std::size_t length);

}  // namespace zinbiel
