#include <doctest.h>

#include <memory>

#include "support.hpp"
#include "zinbiel/magma_poly.hpp"

using namespace zinbiel;
using namespace testing;

namespace {

// Reference weight order on an independent tree type.
struct Tree {
  int letter = -1;
  std::shared_ptr<Tree> l, r;
  int len = 1;
};

std::shared_ptr<Tree> to_tree(const Word& w) {
  auto t = std::make_shared<Tree>();
  if (w.is_leaf()) {
    t->letter = static_cast<int>(w.letter());
    return t;
  }
  t->l = to_tree(w.left());
  t->r = to_tree(w.right());
  t->len = t->l->len + t->r->len;
  return t;
}

int ref_compare(const Tree& a, const Tree& b) {
  if (a.len != b.len) return a.len < b.len ? -1 : 1;
  if (a.len == 1) return a.letter == b.letter ? 0 : (a.letter < b.letter ? -1 : 1);
  if (int c = ref_compare(*a.r, *b.r)) return c;
  return ref_compare(*a.l, *b.l);
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::vector<Word> words_up_to(std::size_t letters, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    auto w = all_words(letters, n);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace

TEST_CASE("compare_words examples") {
  CHECK(compare_words(W("x"), W("y")) < 0);
  CHECK(compare_words(W("(x (y z))"), W("((x y) z)")) > 0);
  CHECK(compare_words(W("(x y)"), W("(y x)")) > 0);
  CHECK(compare_words(W("x"), W("(x x)")) < 0);
}

TEST_CASE("compare_words agrees with a reference order and is total") {
  auto words = words_up_to(2, 5);
  REQUIRE(words.size() == 2 + 4 + 16 + 80 + 448);
  std::vector<std::shared_ptr<Tree>> trees;
  for (const auto& w : words) trees.push_back(to_tree(w));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      int c = sign(compare_words(words[i], words[j]));
      REQUIRE(c == ref_compare(*trees[i], *trees[j]));
      REQUIRE((c == 0) == (i == j));
      REQUIRE(c == -sign(compare_words(words[j], words[i])));
    }
  }
  // all_words lists each length in ascending order, so the concatenation is sorted.
  for (std::size_t i = 1; i < words.size(); ++i) REQUIRE(compare_words(words[i - 1], words[i]) < 0);
}

TEST_CASE("weight order is monomial") {
  auto words = words_up_to(2, 4);
  auto contexts = words_up_to(2, 3);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (!(compare_words(u, v) < 0)) continue;
      for (const auto& w : contexts) {
        REQUIRE(compare_words(Word::node(w, u), Word::node(w, v)) < 0);
        REQUIRE(compare_words(Word::node(u, w), Word::node(v, w)) < 0);
      }
    }
  }
}

TEST_CASE("magma_product") {
  CHECK(magma_product(P("x"), P("y")) == P("(x y)"));
  CHECK(magma_product(P("(+ x y)"), P("x")) == P("(+ (x x) (y x))"));
  auto s = magma_product(P("x"), P("y")) + magma_product(P("y"), P("x"));
  CHECK(s.leading() == W("(x y)"));
  CHECK(magma_product(P("x"), MagmaPoly()).is_zero());
}

TEST_CASE("leading_and_monic") {
  auto [lead, monic] = leading_and_monic(P("(+ (* 3 (x y)) (y x))"));
  CHECK(lead == W("(x y)"));
  CHECK(monic == P("(+ (x y) (* 1/3 (y x)))"));
  auto [lead2, monic2] = leading_and_monic(P("(* 5 (x x))"));
  CHECK(lead2 == W("(x x)"));
  CHECK(monic2 == P("(x x)"));
  CHECK_THROWS_WITH_AS(leading_and_monic(MagmaPoly()), "no leading monomial", Error);
}

TEST_CASE("bracket") {
  std::vector<Rank> xyz_ranks{0, 1, 2};
  CHECK(bracket(xyz_ranks, Bracketing::Left) == W("((x y) z)"));
  CHECK(bracket(xyz_ranks, Bracketing::Right) == W("(x (y z))"));
  std::vector<Rank> single{0};
  CHECK(bracket(single, Bracketing::Left) == W("x"));
  CHECK(bracket(single, Bracketing::Right) == W("x"));
  CHECK_THROWS_AS(bracket(std::vector<Rank>{}, Bracketing::Left), Error);
  CHECK(bracket(xyz_ranks, Bracketing::Left).is_left_combed());
  CHECK_FALSE(bracket(xyz_ranks, Bracketing::Right).is_left_combed());
}

TEST_CASE("word structure") {
  Word w = W("((x y) (z x))");
  CHECK(w.length() == 4);
  CHECK(w.leaves() == std::vector<Rank>{0, 1, 2, 0});
  CHECK(Word(w.at({Side::Right})) == W("(z x)"));
  CHECK(Word(w.at({Side::Left, Side::Right})) == W("y"));
  CHECK_THROWS_AS(w.at({Side::Left, Side::Left, Side::Left}), Error);
  CHECK(w.graft({Side::Left}, W("(z (z z))")) == W("((z (z z)) (z x))"));
  CHECK(w.graft({}, W("y")) == W("y"));
  CHECK(all_words(2, 3).size() == 16);
  CHECK(all_words(3, 4).size() == 5 * 81);
}

TEST_CASE("polynomial arithmetic is exact") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 100; ++round) {
    auto a = random_poly(rng, 2, 4, 4);
    auto b = random_poly(rng, 2, 4, 4);
    auto c = random_poly(rng, 2, 4, 4);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
    REQUIRE(magma_product(a + b, c) == magma_product(a, c) + magma_product(b, c));
    REQUIRE(magma_product(a, b + c) == magma_product(a, b) + magma_product(a, c));
  }
  auto third = P("(* 1/3 x)");
  CHECK((third * Q(3)) == P("x"));
  CHECK((third + third + third) == P("x"));
  auto scaled = third * Q(2, 7);
  CHECK(scaled.coefficient(W("x")) == Q(2, 21));
}
