#include <doctest.h>

#include "lpg/lowx.hpp"
#include "lpg/nq.hpp"
#include "lpg/rs.hpp"

using namespace lpg;

namespace {

FreeWord expand(const SchreierData& sd, const FreeWord& w) {
  std::size_t n = sd.table.rank();
  FreeWord out(n);
  for (Letter x : w.letters()) {
    const auto& g = sd.schreier_gens[static_cast<std::size_t>(x > 0 ? x : -x) - 1];
    out = out * (x > 0 ? g : invert(g));
  }
  return out;
}

std::vector<FreeWord> stabilizer_gens() {
  auto w = [](std::initializer_list<Letter> l) { return FreeWord::reduce(4, l); };
  return {w({2}), w({3}), w({4}), w({1, 2, 1}), w({1, 3, 1}), w({1, 4, 1})};
}

}  // namespace

TEST_SUITE("rs") {
  TEST_CASE("schreier rank is n(m-1)+1") {
    auto subs = low_index_subgroups(preset_grigorchuk(), 4);
    for (const auto& s : subs.subgroups) {
      auto sd = schreier(s.table);
      CHECK(sd.rank() == s.index * 3 + 1);
      CHECK(sd.transversal.size() == s.index);
      CHECK(sd.transversal[0].is_identity());
      for (std::uint32_t k = 1; k <= s.index; ++k) CHECK(s.table.trace(1, sd.transversal[k - 1]) == k);
    }
  }

  TEST_CASE("rewriting inverts expansion") {
    auto subs = low_index_subgroups(preset_gamma(3), 9);
    for (const auto& s : subs.subgroups) {
      auto sd = schreier(s.table);
      for (std::size_t i = 0; i < sd.rank(); ++i) {
        auto w = sd.schreier_gens[i];
        CHECK(end_coset(sd, w) == 1u);
        auto r = rewrite(sd, w);
        CHECK(r == FreeWord::generator(sd.rank(), static_cast<int>(i + 1)));
        CHECK(expand(sd, r) == w);
      }
      // t_k w t_end^-1 for an arbitrary word
      auto w = FreeWord::reduce(2, {1, 2, 2, -1, 2, 1, 1});
      for (std::uint32_t k = 1; k <= s.index; ++k) {
        auto e = end_coset(sd, w, k);
        CHECK(expand(sd, rewrite(sd, w, k)) == sd.transversal[k - 1] * w * invert(sd.transversal[e - 1]));
      }
    }
  }

  TEST_CASE("index one subgroup reproduces the abelianization") {
    auto G = preset_grigorchuk();
    auto t = enumerate(truncate(G, 0), {FreeWord::generator(4, 1), FreeWord::generator(4, 2), FreeWord::generator(4, 3)});
    REQUIRE(t.index() == 1);
    auto S = subgroup_lpresentation(G, t);
    CHECK(S.exact);
    CHECK(S.L.rank() == 4);
    CHECK(abelian_quotient(S.L) == abelian_quotient(G));
  }

  TEST_CASE("exact presentation of the stabilizer") {
    auto G = preset_grigorchuk();
    auto r = l_enumerate(G, stabilizer_gens());
    REQUIRE(r.certified);
    auto S = subgroup_lpresentation(G, r.table);
    CHECK(S.exact);
    CHECK(S.L.invariant());
    CHECK(S.L.rank() == 7);
    CHECK(S.L.substitutions().size() >= G.substitutions().size());
    auto ab = abelian_quotient(S.L);
    CHECK(ab.finite());
    CHECK(ab.order() % 2 == 0);
  }

  TEST_CASE("derived subgroups") {
    auto D = derived_subgroup(preset_grigorchuk(), 64);
    REQUIRE(D.has_value());
    CHECK(D->table.index() == 8);
    CHECK(D->certificate.holds);
    auto S = subgroup_lpresentation(preset_grigorchuk(), D->table);
    CHECK(abelian_quotient(S.L).to_string() == "Z2 x Z2 x Z4");

    auto D3 = derived_subgroup(preset_gamma(3), 64);
    REQUIRE(D3.has_value());
    CHECK(D3->quotient.to_string() == "Z3 x Z3");
    CHECK(D3->table.index() == 9);
    CHECK(is_normal_table(D3->table));
    CHECK_FALSE(derived_subgroup(preset_gamma(3), 8).has_value());
  }

  TEST_CASE("derived series of grigorchuk") {
    auto ds = derived_series_sections(preset_grigorchuk(), 3);
    REQUIRE(ds.sections.size() == 3);
    CHECK(ds.exact);
    CHECK(ds.sections[0].to_string() == "Z2 x Z2 x Z2");
    CHECK(ds.sections[1].to_string() == "Z2 x Z2 x Z4");
    CHECK(ds.cumulative_index[0] == 8);
    CHECK(ds.cumulative_index[1] == 8 * 16);
  }
}
