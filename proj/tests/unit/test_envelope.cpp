#include <doctest.h>

#include <set>

#include "support.hpp"
#include "zinbiel/envelope.hpp"

using namespace zinbiel;
using namespace testing;

namespace {

std::vector<MagmaPoly> explicit_polys(const std::vector<RelationSchema>& schemas) {
  std::vector<MagmaPoly> out;
  for (const auto& s : schemas) {
    if (!s.is_family()) out.push_back(s.poly());
  }
  return out;
}

const RelationSchema& by_label(const std::vector<RelationSchema>& schemas, const std::string& label) {
  for (const auto& s : schemas) {
    if (s.label() == label) return s;
  }
  FAIL("no schema " << label);
  throw 0;
}

// Left combs z1 ... zn with z1 > z2, z3 > z4, ...
std::set<Word> expected_basis(std::size_t d, std::size_t n) {
  std::set<Word> out;
  for (const auto& w : left_combs(d, n)) {
    auto z = w.leaves();
    bool ok = true;
    for (std::size_t i = 0; i + 1 < z.size(); i += 2) ok = ok && z[i] > z[i + 1];
    if (ok) out.insert(w);
  }
  return out;
}

RelationSchema corrupted_r1() {
  return RelationSchema::family("R1-", [](WordView w) -> std::optional<MagmaPoly> {
    if (w.is_leaf() || w.right().is_leaf()) return std::nullopt;
    Word a(w.left()), b(w.right().left()), c(w.right().right());
    MagmaPoly p{Word(w)};
    p.add_term(Word::node(Word::node(a, b), c), -1);
    p.add_term(Word::node(Word::node(b, a), c), 1);
    return p;
  });
}

}  // namespace

TEST_CASE("enveloping_relations") {
  auto trivial = enveloping_relations(CommAlgebra::trivial(2));
  REQUIRE(trivial.schemas.size() == 4);
  CHECK(trivial.schemas[0].is_family());
  CHECK(explicit_polys(trivial.schemas) == std::vector<MagmaPoly>{P("(x x)"), P("(+ (x y) (y x))"), P("(y y)")});

  auto idem = enveloping_relations(CommAlgebra::idempotent());
  CHECK(explicit_polys(idem.schemas) == std::vector<MagmaPoly>{P("(+ (x x) (* -1/2 x))")});

  auto tp = enveloping_relations(CommAlgebra::truncated_polynomial(2));
  const auto& a = tp.alphabet;
  auto polys = explicit_polys(tp.schemas);
  std::vector<MagmaPoly> expected{P("(+ (x1 x1) (* -1/2 x2))", a), P("(+ (x1 x2) (x2 x1))", a), P("(x2 x2)", a)};
  CHECK(polys == expected);
  for (const auto& p : polys) CHECK(p.leading().length() == 2);
}

TEST_CASE("trivial_gsb") {
  auto gsb = trivial_gsb(2);
  const auto& r3 = by_label(gsb, "R3");
  auto inst = r3.instance_at(W("(((y x) x) y)").view());
  REQUIRE(inst);
  CHECK(*inst == P("(+ (((y x) x) y) (((y x) y) x))"));
  CHECK(inst->leading() == W("(((y x) x) y)"));
  CHECK_FALSE(r3.instance_at(W("(((y x) y) x)").view()));  // x < y is required
  CHECK_FALSE(r3.instance_at(W("((x x) y)").view()));      // a must have even length
  CHECK_FALSE(r3.instance_at(W("(((x (y x)) x) y)").view()));  // a must be left-combed

  const auto& r3p = by_label(gsb, "R3'");
  auto sq = r3p.instance_at(W("(((x y) y) y)").view());
  REQUIRE(sq);
  CHECK(*sq == P("(((x y) y) y)"));

  auto one = trivial_gsb(1);
  CHECK(explicit_polys(one) == std::vector<MagmaPoly>{P("(x x)")});
}

TEST_CASE("corollary_count") {
  std::vector<std::uint64_t> d2, d3;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    d2.push_back(corollary_count(2, n));
    d3.push_back(corollary_count(3, n));
  }
  CHECK(d2 == std::vector<std::uint64_t>{2, 1, 2, 1, 2, 1});
  CHECK(d3 == std::vector<std::uint64_t>{3, 3, 9, 9, 27, 27});
  CHECK(corollary_count(1, 2) == 0);
  CHECK(corollary_count(1, 1) == 1);
  CHECK_THROWS_AS(corollary_count(1000, 40), Error);
}

TEST_CASE("irreducible words of the trivial envelope are the corollary basis") {
  for (std::size_t d = 1; d <= 3; ++d) {
    auto words = irreducible_words(trivial_gsb(d), d, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::set<Word> got(words[n - 1].begin(), words[n - 1].end());
      auto want = expected_basis(d, n);
      CHECK(got == want);
      CHECK(got.size() == corollary_count(d, n));
    }
  }
}

TEST_CASE("truncated_poly_relations") {
  auto two = truncated_poly_relations(2);
  Alphabet a2 = CommAlgebra::truncated_polynomial(2).basis();
  CHECK(explicit_polys(two) == std::vector<MagmaPoly>{P("(+ (x1 x1) (* -1/2 x2))", a2), P("(x1 x2)", a2),
                                                     P("(x2 x1)", a2), P("(x2 x2)", a2)});
  auto three = explicit_polys(truncated_poly_relations(3));
  Alphabet a3 = CommAlgebra::truncated_polynomial(3).basis();
  CHECK(std::find(three.begin(), three.end(), P("(+ (x2 x1) (* -1/3 x3))", a3)) != three.end());
  auto four = explicit_polys(truncated_poly_relations(4));
  Alphabet a4 = CommAlgebra::truncated_polynomial(4).basis();
  CHECK(std::find(four.begin(), four.end(), P("(+ (x2 x2) (* -1/2 x4))", a4)) != four.end());

  // x_i (x_j x_k) = k/(i+j+k) x_{i+j+k} = (x_i x_j) x_k + (x_j x_i) x_k.
  const std::size_t n = 4;
  auto rels = truncated_poly_relations(n);
  Alphabet a = CommAlgebra::truncated_polynomial(n).basis();
  Reducer reducer(RelationSet(rels), 3);
  auto x = [&](std::size_t i) { return Word::leaf(static_cast<Rank>(i - 1)); };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        MagmaPoly expected;
        if (i + j + k <= n) expected.add_term(x(i + j + k), Q(static_cast<long>(k), static_cast<long>(i + j + k)));
        MagmaPoly lhs(Word::node(x(i), Word::node(x(j), x(k))));
        MagmaPoly rhs(Word::node(Word::node(x(i), x(j)), x(k)));
        rhs.add_term(Word::node(Word::node(x(j), x(i)), x(k)), 1);
        REQUIRE(reducer.normal_form(lhs) == expected);
        REQUIRE(reducer.normal_form(rhs) == expected);
      }
    }
  }
  CHECK_THROWS_AS(truncated_poly_relations(0), Error);
}

TEST_CASE("verify_thm2") {
  CHECK(verify_thm2(2, 5).verified());
  CHECK(verify_thm2(1, 4).verified());
  auto broken = verify_gsb({corrupted_r1()}, 2, 5);
  CHECK_FALSE(broken.verified());
}

TEST_CASE("verify_thm1") {
  auto two = verify_thm1(2, 6);
  CHECK(two.passed());
  CHECK(two.counts == std::vector<std::size_t>{2, 1, 2, 1, 2, 1});
  CHECK(two.completion_counts == two.counts);
  auto three = verify_thm1(3, 4);
  CHECK(three.passed());
  CHECK(three.counts == std::vector<std::size_t>{3, 3, 9, 9});
  auto one = verify_thm1(1, 4);
  CHECK(one.passed());
  CHECK(one.counts == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("collapse_check") {
  auto idem = collapse_check(CommAlgebra::idempotent(), 4);
  CHECK(idem.counts == std::vector<std::size_t>{0, 0, 0, 0});
  auto polys = explicit_polys(idem.completed);
  CHECK(std::find(polys.begin(), polys.end(), P("x")) != polys.end());

  auto tp = collapse_check(CommAlgebra::truncated_polynomial(3), 5);
  CHECK(tp.counts == std::vector<std::size_t>{3, 0, 0, 0, 0});
  CHECK(tp.star_table_matches);
  CHECK(tp.generators_independent);
  Alphabet a = CommAlgebra::truncated_polynomial(3).basis();
  for (const auto& e : tp.star_table) {
    MagmaPoly want;
    if (e.i + e.j + 2 <= 3) want = P("x" + std::to_string(e.i + e.j + 2), a);
    CHECK(e.induced == want);
  }

  auto triv = collapse_check(CommAlgebra::trivial(2), 5);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(triv.counts[n - 1] == corollary_count(2, n));
}

TEST_CASE("truncpoly_check finds exactly the expected relations") {
  for (std::size_t n : {2, 3}) {
    auto r = truncpoly_check(n, 5);
    CHECK(r.passed());
    CHECK(r.missing.empty());
    CHECK(r.unexpected.empty());
  }
  Alphabet a = CommAlgebra::truncated_polynomial(3).basis();
  auto polys = explicit_polys(truncpoly_check(3, 5).collapse.completed);
  for (const char* text : {"(+ (x1 x1) (* -1/2 x2))", "(+ (x1 x2) (* -2/3 x3))", "(+ (x2 x1) (* -1/3 x3))"}) {
    CHECK(std::find(polys.begin(), polys.end(), P(text, a)) != polys.end());
  }
}

TEST_CASE("odd/even lemma") {
  Reducer reducer(RelationSet(trivial_gsb(2)), 3);
  CHECK(reducer.normal_form(P("(y (y x))")).is_zero());
  auto sweep = lemma_odd_even_check(2, 5, 4);
  CHECK(sweep.passed());
  CHECK(sweep.pairs_checked == (2 + 8 + 32) * (4 + 16));
  CHECK_THROWS_AS(lemma_odd_even_check(2, 4, 4), Error);
  CHECK_THROWS_AS(lemma_odd_even_check(2, 5, 3), Error);
}
