#include <doctest.h>

#include "lpg/lcenum.hpp"

using namespace lpg;

namespace {

// Regular action of a group of bitmasks on 2^bits points.
PermRep mask_action(const std::vector<std::uint32_t>& masks, int bits) {
  PermRep p;
  p.degree = std::size_t{1} << bits;
  for (auto m : masks) {
    std::vector<std::uint32_t> perm(p.degree);
    for (std::uint32_t v = 0; v < p.degree; ++v) perm[v] = v ^ m;
    p.perms.push_back(perm);
  }
  return p;
}

std::vector<FreeWord> stabilizer_gens() {
  auto w = [](std::initializer_list<Letter> l) { return FreeWord::reduce(4, l); };
  return {w({2}), w({3}), w({4}), w({1, 2, 1}), w({1, 3, 1}), w({1, 4, 1})};
}

}  // namespace

TEST_SUITE("lcenum") {
  TEST_CASE("trivial action always extends") {
    auto G = preset_grigorchuk();
    PermRep p{1, std::vector<std::vector<std::uint32_t>>(4, {0})};
    auto cert = check_induced(G, p);
    CHECK(cert.holds);
    CHECK(cert.closure_size == 1);
  }

  TEST_CASE("abelianization of grigorchuk extends") {
    // a -> e1, b -> e2, c -> e3, d -> e2 + e3
    auto cert = check_induced(preset_grigorchuk(), mask_action({1, 2, 4, 6}, 3));
    CHECK(cert.holds);
    CHECK(cert.relators_checked > 0);
  }

  TEST_CASE("wrong images are refuted with a witness") {
    // d -> b + c + e1 breaks bcd = 1
    auto bad = check_induced(preset_grigorchuk(), mask_action({1, 2, 4, 7}, 3));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());

    auto x = FreeWord::generator(1, 1);
    LPresentation L(Alphabet({"a"}), {}, {}, {power(x, 2L)});
    PermRep five{5, {{1, 2, 3, 4, 0}}};
    auto cert = check_induced(L, five);
    CHECK_FALSE(cert.holds);
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness == power(x, 2L));
  }

  TEST_CASE("refutation through an iterated image") {
    // phi: a -> b, so a^2 holds but phi(a^2) = b^2 does not.
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    LPresentation L(Alphabet({"a", "b"}), {}, {Substitution{"phi", FreeEndomorphism({b, b})}}, {power(a, 2L)});
    PermRep p{3, {{1, 0, 2}, {1, 2, 0}}};
    auto cert = check_induced(L, p);
    CHECK_FALSE(cert.holds);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness_label == std::vector<int>{0});
    PermRep q{3, {{1, 0, 2}, {1, 0, 2}}};
    CHECK(check_induced(L, q).holds);
  }

  TEST_CASE("certified indices") {
    auto G = preset_grigorchuk();
    auto r = l_enumerate(G, stabilizer_gens());
    REQUIRE(r.certified);
    CHECK(r.index == 2);
    CHECK(r.certificate->holds);

    auto a = FreeWord::generator(4, 1);
    auto one = l_enumerate(G, {a, FreeWord::generator(4, 2), FreeWord::generator(4, 3)});
    REQUIRE(one.certified);
    CHECK(one.index == 1);
  }

  TEST_CASE("gamma_3 subgroup of index 3") {
    auto al = FreeWord::generator(2, 1), rho = FreeWord::generator(2, 2);
    std::vector<FreeWord> H{rho, conjugate(rho, al), conjugate(rho, power(al, 2L)), power(al, 3L)};
    auto r = l_enumerate(preset_gamma(3), H);
    REQUIRE(r.certified);
    CHECK(r.index == 3);
  }

  TEST_CASE("certified index divides the index in every truncated cover") {
    auto G = preset_grigorchuk();
    CosetLimits lim;
    lim.max_cosets = 20000;
    std::size_t prev = 0;
    for (int ell = 0; ell <= 4; ++ell) {
      auto t = enumerate(truncate(G, ell), stabilizer_gens(), lim);
      if (!t.complete()) continue;
      CHECK(t.index() % 2 == 0);
      if (prev) CHECK(prev % t.index() == 0);
      prev = t.index();
    }
    CHECK(prev == 2);
  }
}
