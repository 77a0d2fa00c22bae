#include <doctest.h>

#include <set>

#include "lpg/lowx.hpp"
#include "lpg/nq.hpp"

using namespace lpg;

namespace {

std::vector<std::size_t> dense(const std::map<std::size_t, std::size_t>& m, std::size_t n) {
  std::vector<std::size_t> out(n, 0);
  for (auto [k, v] : m)
    if (k >= 1 && k <= n) out[k - 1] = v;
  return out;
}

}  // namespace

TEST_SUITE("lowx") {
  TEST_CASE("finitely presented S3") {
    auto a = FreeWord::generator(2, 1), b = FreeWord::generator(2, 2);
    FinitePresentation fp{Alphabet({"a", "b"}), {power(a, 2L), power(b, 3L), power(a * b, 2L)}};
    auto r = low_index_fp(fp, 6);
    CHECK(dense(r.counts(), 6) == std::vector<std::size_t>{1, 1, 3, 0, 0, 1});
    CHECK(dense(r.counts(true), 6) == std::vector<std::size_t>{1, 1, 0, 0, 0, 1});
  }

  TEST_CASE("grigorchuk up to index 8") {
    LowIndexPolicy pol;
    auto r = low_index_subgroups(preset_grigorchuk(), 8, pol);
    CHECK_FALSE(r.partial);
    CHECK(dense(r.counts(), 8) == std::vector<std::size_t>{1, 7, 0, 31, 0, 0, 0, 183});
    CHECK(dense(r.counts(true), 8) == std::vector<std::size_t>{1, 7, 0, 7, 0, 0, 0, 7});
    for (const auto& s : r.subgroups) {
      CHECK(s.certified);
      CHECK(s.table.closed());
    }
  }

  TEST_CASE("normal subgroups agree with the normal filter") {
    auto G = preset_gamma(3);
    auto all = low_index_subgroups(G, 9);
    auto nor = normal_subgroups(G, 9);
    CHECK(nor.counts() == all.counts(true));
    std::set<std::vector<std::uint32_t>> tables;
    for (const auto& s : all.subgroups) tables.insert(s.table.data());
    for (const auto& s : nor.subgroups) {
      CHECK(s.is_normal);
      CHECK(tables.count(s.table.data()) == 1);
    }
  }

  TEST_CASE("index p normal subgroups count (p^r - 1)/(p - 1)") {
    struct Case {
      LPresentation L;
      long p;
    };
    for (auto& [L, p] : std::vector<Case>{{preset_grigorchuk(), 2}, {preset_gamma(3), 3}, {preset_gamma(4), 2}, {preset_gamma(5), 5}}) {
      auto ab = abelian_quotient(L);
      std::size_t r = ab.p_rank(p), expect = 0, pk = 1;
      for (std::size_t i = 0; i < r; ++i, pk *= static_cast<std::size_t>(p)) expect += pk;
      auto res = normal_subgroups(L, static_cast<std::size_t>(p));
      CHECK(res.counts()[static_cast<std::size_t>(p)] == expect);
    }
  }

  TEST_CASE("reroot and normality") {
    auto r = low_index_subgroups(preset_grigorchuk(), 4);
    for (const auto& s : r.subgroups) {
      CHECK(reroot(s.table, 1) == s.table);
      bool all_equal = true;
      for (std::uint32_t k = 1; k <= s.table.size(); ++k) all_equal = all_equal && reroot(s.table, k) == s.table;
      CHECK(all_equal == s.is_normal);
      CHECK(is_normal_table(s.table) == s.is_normal);
    }
  }

  TEST_CASE("results do not depend on the pruning depth") {
    auto G = preset_gamma(4);
    LowIndexPolicy p0, p3;
    p0.ell = 0;
    p3.ell = 3;
    auto r0 = low_index_subgroups(G, 4, p0), r3 = low_index_subgroups(G, 4, p3);
    REQUIRE(r0.subgroups.size() == r3.subgroups.size());
    for (std::size_t i = 0; i < r0.subgroups.size(); ++i) CHECK(r0.subgroups[i].table == r3.subgroups[i].table);
    CHECK(r0.refuted >= r3.refuted);
  }

  TEST_CASE("threads give the same answer") {
    LowIndexPolicy p1, p4;
    p4.threads = 4;
    auto a = low_index_subgroups(preset_gamma(4), 8, p1), b = low_index_subgroups(preset_gamma(4), 8, p4);
    CHECK(a.counts() == b.counts());
    CHECK(dense(a.counts(), 8) == std::vector<std::size_t>{1, 3, 0, 19, 0, 0, 0, 211});
    CHECK(dense(a.counts(true), 8) == std::vector<std::size_t>{1, 3, 0, 7, 0, 0, 0, 7});
  }
}
