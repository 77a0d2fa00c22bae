#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lpg/lcenum.hpp"
#include "lpg/lpres.hpp"
#include "lpg/tc.hpp"

namespace lpg {

struct SubgroupRecord {
  CosetTable table;  // complete, standardized
  std::size_t index = 0;
  bool is_normal = false;
  std::vector<FreeWord> generators;  // Schreier generators, filled on request
  bool certified = false;
};

struct LowIndexPolicy {
  /// Truncation depth whose relators prune the search. Certification is exact at any depth.
  int ell = 2;
  /// Pruning uses only relators up to this length (0 = all).
  std::size_t max_relator_length = 0;
  double max_seconds = 0;
  unsigned threads = 1;
  bool with_generators = false;
};

struct LowIndexResult {
  std::vector<SubgroupRecord> subgroups;  // ordered by index, then table
  std::size_t candidates = 0;             // class representatives found in the cover
  std::size_t refuted = 0;                // rejected by check_induced
  int ell_used = 0;
  bool partial = false;
  std::string message;

  /// index -> number of subgroups (all, or normal only).
  std::map<std::size_t, std::size_t> counts(bool normal_only = false) const;
};

LowIndexResult low_index_subgroups(const LPresentation& L, std::size_t n, const LowIndexPolicy& policy = {});
LowIndexResult normal_subgroups(const LPresentation& L, std::size_t n, const LowIndexPolicy& policy = {});

/// Low-index search in a finitely presented group (no certification step).
LowIndexResult low_index_fp(const FinitePresentation& fp, std::size_t n, const LowIndexPolicy& policy = {});

/// Standardized table of the same action with coset k as base point.
CosetTable reroot(const CosetTable& t, std::uint32_t k);
bool is_normal_table(const CosetTable& t);

}  // namespace lpg
