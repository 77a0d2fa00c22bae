#include <doctest.h>

#include "lpg/lpfile.hpp"

using namespace lpg;

TEST_SUITE("lpfile") {
  TEST_CASE("presets round trip") {
    for (const auto& L : {preset_grigorchuk(), preset_gamma(3), preset_gamma(6)}) {
      auto text = print_lp(L);
      CHECK(parse_lp(text) == L);
    }
  }

  TEST_CASE("hand written grigorchuk equals the preset") {
    auto L = parse_lp(
        "gens: a, b, c, d;\n"
        "Q: a^2, b^2, c^2, d^2, b*c*d;\n"
        "phi sigma: a -> a*c*a, b -> d, c -> b, d -> c;\n"
        "R: (a*d)^4, (a*d*a*c*a*c)^4;\n"
        "flags: invariant;\n");
    CHECK(L == preset_grigorchuk());
  }

  TEST_CASE("word syntax") {
    Alphabet X({"a", "b"});
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    CHECK(parse_word("a*b^-1", X) == a * invert(b));
    CHECK(parse_word("a^(b)", X) == conjugate(a, b));
    CHECK(parse_word("a^(b^-1)", X) == conjugate(a, invert(b)));
    CHECK(parse_word("a^b", X) == conjugate(a, b));
    CHECK(parse_word("[a,b]", X) == commutator(a, b));
    CHECK(parse_word("(a*b)^3", X) == power(a * b, 3L));
    CHECK(parse_word("1", X).is_identity());
    CHECK(parse_word_list("a, b^2, 1", X).size() == 3);
  }

  TEST_CASE("sections in any order, comments, defaults") {
    auto L = parse_lp(
        "# dihedral-like\n"
        "gens: a, b;\n"
        "R: a^2, b^2;\n"
        "phi s: a -> b;\n"
        "Q: (a*b)^4;\n");
    CHECK(L.rank() == 2);
    CHECK(L.fixed_relators().size() == 1);
    CHECK(L.iterated_relators().size() == 2);
    REQUIRE(L.substitutions().size() == 1);
    CHECK(L.substitutions()[0].map.image(2) == FreeWord::generator(2, 2));
    CHECK_FALSE(L.invariant());
    CHECK(parse_lp("gens: a; Q: a^2; R: a^3; flags: invariant;").invariant());
    CHECK(parse_lp("gens: a; R: a^3;").ascending());
  }

  TEST_CASE("errors carry positions") {
    try {
      parse_lp("gens: a, b;\nR: a^2, c;\n");
      FAIL("no error");
    } catch (const LpParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 9);
    }
    CHECK_THROWS_AS(parse_lp("gens a;"), LpParseError);
    CHECK_THROWS_AS(parse_lp("R: a;"), LpParseError);
    CHECK_THROWS_AS(parse_word("a^", Alphabet({"a"})), LpParseError);
  }
}
