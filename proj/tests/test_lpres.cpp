#include <doctest.h>

#include <algorithm>

#include "lpg/lpres.hpp"

using namespace lpg;

TEST_SUITE("lpres") {
  TEST_CASE("grigorchuk preset shape") {
    auto G = preset_grigorchuk();
    CHECK(G.rank() == 4);
    CHECK(G.fixed_relators().size() == 5);
    CHECK(G.iterated_relators().size() == 2);
    CHECK(G.substitutions().size() == 1);
    CHECK_FALSE(G.ascending());
    CHECK(G.invariant());
  }

  TEST_CASE("gamma presets are ascending") {
    for (int d : {3, 4, 5}) {
      auto L = preset_gamma(d);
      CHECK(L.rank() == 2);
      CHECK(L.ascending());
      CHECK(L.invariant());
      CHECK(L.iterated_relators().front() == power(FreeWord::generator(2, 1), static_cast<long>(d)));
    }
    CHECK(preset_gamma(3).iterated_relators().size() == 19);
    CHECK_THROWS(preset_gamma(2));
  }

  TEST_CASE("relators are deduplicated and identities dropped") {
    auto a = FreeWord::generator(1, 1);
    LPresentation L(Alphabet({"a"}), {a * a, a * a, FreeWord(1)}, {}, {});
    CHECK(L.fixed_relators().size() == 1);
  }

  TEST_CASE("phi ball and truncation") {
    auto G = preset_grigorchuk();
    auto ball = phi_ball(G, 3);
    CHECK(ball.elements.size() == 4);
    CHECK(ball.elements[2].label == std::vector<int>{0, 0});
    auto f0 = truncate(G, 0), f2 = truncate(G, 2);
    CHECK(f0.relators.size() == 7);
    CHECK(f2.relators.size() == 11);
    // truncations grow monotonically
    for (const auto& r : f0.relators) CHECK(std::find(f2.relators.begin(), f2.relators.end(), r) != f2.relators.end());
  }
}
