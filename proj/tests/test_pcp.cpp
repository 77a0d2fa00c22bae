#include <doctest.h>

#include <array>
#include <random>

#include "lpg/pcp.hpp"

using namespace lpg;

namespace {

// D8 with a = s, b = r, c = r^2: a^2 = 1, b^2 = c, c^2 = 1, b^a = b c.
PcPresentation dihedral8() {
  PcPresentation P(3);
  P.set_power(0, 2, {});
  P.set_power(1, 2, {{2, 1}});
  P.set_power(2, 2, {});
  P.set_conjugate(0, 1, {{1, 1}, {2, 1}});
  return P;
}

using Perm4 = std::array<int, 4>;
Perm4 compose(const Perm4& p, const Perm4& q) {  // apply p, then q
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = q[p[i]];
  return r;
}

Perm4 perm_of(const ExpVector& e) {
  const Perm4 s{0, 3, 2, 1}, r{1, 2, 3, 0};
  Perm4 c = compose(r, r);
  Perm4 out{0, 1, 2, 3};
  const Perm4 gens[3] = {s, r, c};
  for (int g = 0; g < 3; ++g)
    for (Exp k = 0; k < e[g]; ++k) out = compose(out, gens[g]);
  return out;
}

// Heisenberg group: y^x = y z, z central, all infinite.
PcPresentation heisenberg() {
  PcPresentation P(3);
  P.set_conjugate(0, 1, {{1, 1}, {2, 1}});
  P.set_conjugate_inverse(0, 1, {{1, 1}, {2, -1}});
  return P;
}

struct Uni {
  long a = 0, b = 0, c = 0;  // [[1,a,c],[0,1,b],[0,0,1]]
  Uni operator*(const Uni& o) const { return {a + o.a, b + o.b, c + o.c + a * o.b}; }
  bool operator==(const Uni&) const = default;
};

Uni uni_of(const ExpVector& e) {
  // x = (1,0,0), y = (0,1,0), z = (0,0,1) with y^x = y z  <=>  x^-1 y x = y z.
  // In matrices, X^-1 Y X = Y Z^-1 with the convention above, so map x to X^-1.
  Uni x{-1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
  Uni out;
  auto pw = [](Uni g, Exp k) {
    Uni r;
    Uni inv{-g.a, -g.b, -g.c + g.a * g.b};
    for (Exp i = 0; i < (k < 0 ? -k : k); ++i) r = r * (k < 0 ? inv : g);
    return r;
  };
  return out * pw(x, e[0]) * pw(y, e[1]) * pw(z, e[2]);
}

}  // namespace

TEST_SUITE("pcp") {
  TEST_CASE("dihedral group of order 8") {
    auto P = dihedral8();
    CHECK(P.order() == 8);
    CHECK(P.consistency_check().empty());
    ExpVector b{0, 1, 0}, a{1, 0, 0};
    CHECK(P.product(b, b) == ExpVector{0, 0, 1});
    CHECK(P.product(b, a) == ExpVector{1, 1, 1});
    CHECK(P.inverse(b) == ExpVector{0, 1, 1});
    CHECK(P.power(b, 4) == P.identity());
    CHECK(P.commutator(a, b) == ExpVector{0, 0, 1});
  }

  TEST_CASE("collection agrees with the permutation model") {
    auto P = dihedral8();
    std::mt19937 rng(3);
    for (int it = 0; it < 300; ++it) {
      PcWord w;
      Perm4 expect{0, 1, 2, 3};
      for (int k = 0; k < 8; ++k) {
        int g = static_cast<int>(rng() % 3);
        Exp e = static_cast<Exp>(rng() % 5) - 2;
        w.push_back({g, e});
        ExpVector gen = P.identity();
        gen[static_cast<std::size_t>(g)] = 1;
        Perm4 gp = perm_of(gen);
        Perm4 inv{};
        for (int i = 0; i < 4; ++i) inv[gp[i]] = i;
        for (Exp i = 0; i < (e < 0 ? -e : e); ++i) expect = compose(expect, e < 0 ? inv : gp);
      }
      CHECK(perm_of(P.collect(w)) == expect);
    }
  }

  TEST_CASE("infinite orders against unitriangular matrices") {
    auto P = heisenberg();
    CHECK(P.order() == 0);
    CHECK(P.consistency_check().empty());
    std::mt19937 rng(11);
    for (int it = 0; it < 200; ++it) {
      ExpVector u(3), v(3);
      for (auto& x : u) x = static_cast<Exp>(rng() % 9) - 4;
      for (auto& x : v) x = static_cast<Exp>(rng() % 9) - 4;
      CHECK(uni_of(P.product(u, v)) == uni_of(u) * uni_of(v));
      CHECK(P.product(u, P.inverse(u)) == P.identity());
    }
  }

  TEST_CASE("associativity of collection") {
    std::mt19937 rng(17);
    for (auto P : {dihedral8(), heisenberg()}) {
      for (int it = 0; it < 200; ++it) {
        ExpVector u(3), v(3), w(3);
        for (auto* e : {&u, &v, &w})
          for (int g = 0; g < 3; ++g) {
            Exp ord = P.relative_order(g);
            (*e)[static_cast<std::size_t>(g)] = ord ? static_cast<Exp>(rng() % static_cast<unsigned>(ord))
                                                    : static_cast<Exp>(rng() % 7) - 3;
          }
        CHECK(P.product(P.product(u, v), w) == P.product(u, P.product(v, w)));
      }
    }
  }

  TEST_CASE("inconsistent presentation is detected") {
    // a^2 = 1 but conjugating b twice by a gives b c^2
    PcPresentation P(3);
    P.set_power(0, 2, {});
    P.set_power(1, 3, {});
    P.set_power(2, 3, {});
    P.set_conjugate(0, 1, {{1, 1}, {2, 1}});
    CHECK_FALSE(P.consistency_check().empty());
  }

  TEST_CASE("quotient by a central subgroup") {
    auto P = dihedral8();
    Lattice S(1);
    S.insert({BigInt(1)});
    auto Q = quotient_by_central(P, 2, S);
    CHECK(Q.P.size() == 2);
    CHECK(Q.P.order() == 4);
    CHECK(Q.gen_map[2] == -1);
  }
}
