#include <doctest.h>

#include "lpg/dwyer.hpp"
#include "lpg/nq.hpp"
#include "oracles.hpp"

using namespace lpg;

namespace {

std::vector<std::size_t> ranks(const NilpotentQuotient& q) {
  std::vector<std::size_t> out;
  for (const auto& s : q.sections) out.push_back(s.torsion.size() + s.free_rank);
  return out;
}

LPresentation free_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return LPresentation(Alphabet(names), {}, {}, {});
}

}  // namespace

TEST_SUITE("nq") {
  TEST_CASE("abelian quotients of the presets") {
    CHECK(abelian_quotient(preset_grigorchuk()).to_string() == "Z2 x Z2 x Z2");
    CHECK(abelian_quotient(preset_gamma(3)).to_string() == "Z3 x Z3");
    CHECK(abelian_quotient(free_group(3)).free_rank == 3);
  }

  TEST_CASE("free nilpotent ranks follow Witt's formula") {
    auto q = nilpotent_quotient(free_group(2), 5);
    CHECK(q.klass == 5);
    for (const auto& s : q.sections) CHECK(s.torsion.empty());
    std::vector<std::size_t> free_ranks;
    for (const auto& s : q.sections) free_ranks.push_back(s.free_rank);
    CHECK(free_ranks == std::vector<std::size_t>{2, 1, 2, 3, 6});
    CHECK(q.P.consistency_check().empty());
  }

  TEST_CASE("finite abelian group stabilizes at class 1") {
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    LPresentation L(Alphabet({"a", "b"}), {}, {}, {power(a, 4L), power(b, 6L), commutator(a, b)});
    auto q = nilpotent_quotient(L, 3);
    CHECK(q.klass == 1);
    CHECK(q.stabilized);
    CHECK(q.sections[0].to_string() == "Z2 x Z12");
  }

  TEST_CASE("grigorchuk low classes and relator evaluation") {
    auto G = preset_grigorchuk();
    auto q = nilpotent_quotient(G, 6);
    CHECK(ranks(q) == std::vector<std::size_t>{3, 2, 2, 1, 2, 2});
    for (const auto& s : q.sections)
      for (const auto& t : s.torsion) CHECK(t == 2);
    CHECK(q.P.consistency_check().empty());
    for (const auto& r : truncate(G, 3).relators) CHECK(evaluate(q.P, r) == q.P.identity());
  }

  TEST_CASE("gamma_4 mixed section") {
    auto q = nilpotent_quotient(preset_gamma(4), 2);
    REQUIRE(q.sections.size() == 2);
    CHECK(q.sections[1].to_string() == "Z4");
  }

  TEST_CASE("gamma_6 maximal nilpotent quotient matches the wreath product") {
    auto q = maximal_nilpotent_detect(preset_gamma(6), 8);
    REQUIRE(q.has_value());
    CHECK(q->stabilized);
    auto oracle_sections = oracle::lower_central_sections(oracle::wreath(6), 36);
    REQUIRE(q->sections.size() == oracle_sections.size());
    for (std::size_t k = 0; k < oracle_sections.size(); ++k) {
      std::vector<long> ours;
      for (const auto& f : q->sections[k].primary_factors()) ours.push_back(f.get_si());
      CHECK(ours == oracle_sections[k]);
    }
  }

  TEST_CASE("prime power gamma has no maximal quotient within range") {
    CHECK_FALSE(maximal_nilpotent_detect(preset_gamma(3), 4).has_value());
  }

  TEST_CASE("budget yields a flagged partial result") {
    NqBudget b;
    b.max_tails = 1;
    auto q = nilpotent_quotient(preset_gamma(3), 6, b);
    CHECK(q.partial);
    CHECK_FALSE(q.message.empty());
  }
}

TEST_SUITE("dwyer") {
  TEST_CASE("grigorchuk entries") {
    auto ds = dwyer_quotients(preset_grigorchuk(), 6);
    REQUIRE(ds.entries.size() == 6);
    std::vector<std::size_t> r;
    for (const auto& e : ds.entries) r.push_back(e.p_rank(2));
    CHECK(r == std::vector<std::size_t>{0, 1, 2, 3, 3, 3});
  }

  TEST_CASE("finite presentation: Klein four group has multiplier Z2") {
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    LPresentation L(Alphabet({"a", "b"}), {}, {}, {a * a, b * b, commutator(a, b)});
    auto ds = dwyer_quotients(L, 4);
    REQUIRE(ds.entries.size() == 4);
    CHECK(ds.entries[0].trivial());
    for (std::size_t c = 1; c < 4; ++c) CHECK(ds.entries[c].to_string() == "Z2");
  }

  TEST_CASE("surjection chain: orders divide") {
    auto ds = dwyer_quotients(preset_gamma(9), 5);
    for (std::size_t c = 1; c < ds.entries.size(); ++c) {
      BigInt lo = ds.entries[c - 1].order(), hi = ds.entries[c].order();
      CHECK(hi % lo == 0);
    }
  }
}
