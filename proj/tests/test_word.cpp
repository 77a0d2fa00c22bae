#include <doctest.h>

#include <random>

#include "lpg/word.hpp"

using namespace lpg;

namespace {

FreeWord random_word(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<int> g(1, static_cast<int>(rank));
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < len; ++i) raw.push_back(sign(rng) ? g(rng) : -g(rng));
  return FreeWord::reduce(rank, raw);
}

}  // namespace

TEST_SUITE("word") {
  TEST_CASE("free reduction") {
    CHECK(FreeWord::reduce(2, {1, -1}).is_identity());
    CHECK(FreeWord::reduce(2, {1, 2, -2, 1}).length() == 2);
    CHECK(FreeWord::reduce(2, {1, 2, -2, -1, 2}) == FreeWord::generator(2, 2));
  }

  TEST_CASE("string form") {
    Alphabet X({"a", "b"});
    CHECK(to_string(FreeWord::reduce(2, {1, 1, -2}), X) == "a^2*b^-1");
    CHECK(to_string(FreeWord(2), X) == "1");
  }

  TEST_CASE("alphabet lookup and mismatch") {
    Alphabet X({"x", "y", "z"});
    CHECK(X.index_of("y") == 2);
    CHECK_FALSE(X.index_of("w").has_value());
    CHECK_THROWS_AS(multiply(FreeWord::generator(2, 1), FreeWord::generator(3, 1)), std::invalid_argument);
  }

  TEST_CASE("commutator and conjugate conventions") {
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    CHECK(commutator(a, b) == FreeWord::reduce(2, {-1, -2, 1, 2}));
    CHECK(conjugate(a, b) == FreeWord::reduce(2, {-2, 1, 2}));
    CHECK(power(a * b, -2L) == FreeWord::reduce(2, {-2, -1, -2, -1}));
    CHECK(power(a, 0L).is_identity());
  }

  TEST_CASE("cyclic reduction") {
    CHECK(cyclically_reduce(FreeWord::reduce(2, {2, 1, 1, -2})) == FreeWord::reduce(2, {1, 1}));
  }

  TEST_CASE("endomorphism application and composition") {
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    FreeEndomorphism s({a * b, b});
    FreeEndomorphism t({b, a});
    auto w = commutator(a, b);
    CHECK(apply(compose(s, t), w) == apply(s, apply(t, w)));
    CHECK(apply(FreeEndomorphism::identity(2), w) == w);
  }

  TEST_CASE("group laws on random words") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
      auto u = random_word(rng, 3, 12), v = random_word(rng, 3, 12), w = random_word(rng, 3, 12);
      CHECK((u * v) * w == u * (v * w));
      CHECK((u * invert(u)).is_identity());
      CHECK(invert(u * v) == invert(v) * invert(u));
      CHECK(invert(invert(u)) == u);
      FreeEndomorphism s({v, w, u});
      CHECK(apply(s, u * v) == apply(s, u) * apply(s, v));
      CHECK(apply(s, invert(w)) == invert(apply(s, w)));
      CHECK(power(u, 3L) == u * u * u);
    }
  }
}
