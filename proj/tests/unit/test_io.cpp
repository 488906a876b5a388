#include <doctest.h>

#include "support.hpp"
#include "zinbiel/algebra_io.hpp"
#include "zinbiel/rb_embed.hpp"

using namespace zinbiel;
using namespace testing;

TEST_CASE("word and polynomial syntax") {
  CHECK(format_word(W("(x (y z))"), xyz()) == "(x (y z))");
  CHECK(S(P("(+ ((y x) z) ((x y) z))")) == "(+ ((x y) z) ((y x) z))");
  CHECK(S(P("0")) == "0");
  CHECK(S(P("(+)")) == "0");
  CHECK(S(P("(* 1 x)")) == "x");
  CHECK(S(P("(* -2/4 x)")) == "(* -1/2 x)");
  CHECK(S(P("(+ x (* -1 x))")) == "0");
  CHECK(S(P("  ; comment\n (x y) ; trailing\n")) == "(x y)");
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_poly("(+ x\n  (y w))", xyz());
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()).find("unknown letter 'w'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_word("(x y z)", xyz()), ParseError);
  CHECK_THROWS_AS(parse_word("(x y", xyz()), ParseError);
  CHECK_THROWS_AS(parse_word("x)", xyz()), ParseError);
  CHECK_THROWS_AS(parse_poly("(* 1/0 x)", xyz()), ParseError);
  CHECK_THROWS_AS(parse_poly("(+ (+ x))", xyz()), ParseError);
  CHECK_THROWS_AS(parse_word("", xyz()), ParseError);
  CHECK_THROWS_AS(parse_word("x y", xyz()), ParseError);
}

TEST_CASE("round trips of words and polynomials") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    auto w = random_word(rng, 3, 1 + i % 7);
    REQUIRE(parse_word(format_word(w, xyz()), xyz()) == w);
    auto p = random_poly(rng, 3, 5, 1 + i % 5) * Q(1 + i % 4, 1 + i % 3);
    REQUIRE(P(S(p)) == p);
  }
  for (int i = 0; i < 100; ++i) {
    auto z = random_zinb_element(rng, 3, 4, 4);
    REQUIRE(parse_zinb(format_zinb(z, xyz()), xyz()) == z);
  }
}

TEST_CASE("relation files") {
  auto file = parse_relation_file("; comment\n(family R1)\n(+ (b a) (a b))\n(* 2 (a a))\n");
  CHECK(file.alphabet.names() == std::vector<std::string>{"a", "b"});
  REQUIRE(file.schemas.size() == 3);
  CHECK(file.schemas[0].label() == "R1");
  CHECK(file.schemas[2].poly() == P("(a a)", file.alphabet));
  auto again = parse_relation_file(format_relation_file(file));
  CHECK(again.alphabet == file.alphabet);
  REQUIRE(again.schemas.size() == file.schemas.size());
  for (std::size_t i = 1; i < file.schemas.size(); ++i) CHECK(again.schemas[i].poly() == file.schemas[i].poly());

  auto declared = parse_relation_file("(alphabet y x)\n(x y)");
  CHECK(declared.alphabet.names() == std::vector<std::string>{"y", "x"});
  auto natural = parse_relation_file("(x10 x2)", {"x1"});
  CHECK(natural.alphabet.names() == std::vector<std::string>{"x1", "x2", "x10"});

  CHECK_THROWS_AS(parse_relation_file("(alphabet x)\n(x y)"), ParseError);
  CHECK_THROWS_AS(parse_relation_file("(family R9)"), ParseError);
  CHECK_THROWS_AS(parse_relation_file("(alphabet x)\n(alphabet y)"), ParseError);
  CHECK_THROWS_AS(parse_relation_file("0"), ParseError);
  for (const char* label : {"R1", "R3", "R3'"}) CHECK(family_by_label(label).label() == label);
}

TEST_CASE("algebra files") {
  auto file = parse_algebra_json(R"({"basis": ["x1", "x2", "x3"], "levels": [1, 2, 3],
    "products": ["x1 x1 -> x2", "x2 x1 -> 1/2 x3 - x1 + -3 x2"]})");
  const auto& a = file.algebra;
  CHECK(a.basis().names() == std::vector<std::string>{"x1", "x2", "x3"});
  CHECK(file.levels == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(a.product(0, 0) == Vector{0, 1, 0});
  CHECK(a.product(0, 1) == Vector{-1, -3, Q(1, 2)});
  CHECK(a.product(1, 0) == a.product(0, 1));
  CHECK(a.product(2, 2) == Vector{0, 0, 0});
  CHECK(parse_algebra_json(format_algebra_json(file)) == file);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    AlgebraFile f{random_nilpotent_algebra(rng), std::nullopt};
    REQUIRE(parse_algebra_json(format_algebra_json(f)) == f);
  }

  try {
    parse_algebra_json("{\"basis\": [\"x\"],\n \"products\": [\"x x -> y\"]}");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("unknown basis element 'y'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_json("{\"basis\": [\"x\"], \"products\": [\"x x -> x\", \"x x -> 0\"]}"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json("{\"basis\": [\"x\"], \"levels\": [0]}"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json("{\"basis\": [\"x\"], \"extra\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json("{\"basis\": [\"x\"], \"products\": [\"x -> x\"]}"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json("{\"basis\": [\"x\"], \"products\": [\"x x -> 2\"]}"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json("{\"basis\": [\"x\"], \"products\": [\"x x -> x +\"]}"), ParseError);
  try {
    parse_algebra_json("{\n  \"basis\": [\"x\"\n}");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
