#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpg/lcenum.hpp"
#include "lpg/lowx.hpp"
#include "lpg/lpres.hpp"
#include "lpg/tc.hpp"
#include "lpg/zlat.hpp"

namespace lpg {

struct SchreierData {
  CosetTable table;
  /// transversal[k-1] represents coset k; prefix closed, transversal[0] = identity.
  std::vector<FreeWord> transversal;
  /// Nontrivial Schreier generators t_k x t_{k.x}^-1 over the parent alphabet.
  std::vector<FreeWord> schreier_gens;
  /// (coset, generator) label of each Schreier generator.
  std::vector<std::pair<std::uint32_t, int>> labels;
  /// letter_of[(k-1)*rank + (g-1)] = 1-based Schreier letter, or 0 on tree edges.
  std::vector<int> letter_of;

  std::size_t rank() const noexcept { return schreier_gens.size(); }
};

SchreierData schreier(const CosetTable& table);

/// Rewrites w read from coset `at`; the result represents t_at w t_end^-1.
FreeWord rewrite(const SchreierData& sd, const FreeWord& w, std::uint32_t at = 1);
/// The coset reached from `at` along w.
std::uint32_t end_coset(const SchreierData& sd, const FreeWord& w, std::uint32_t at = 1);
/// Names "<generator>_<coset>" for the Schreier alphabet.
Alphabet schreier_alphabet(const SchreierData& sd, const Alphabet& parent);

struct SubgroupLPresentation {
  LPresentation L;
  SchreierData sd;
  /// True when the presentation defines the subgroup itself, not a subgroup of a truncated cover.
  bool exact = false;
  std::string message;
};

/// Subgroup presentation from a complete coset table of a subgroup of G.
SubgroupLPresentation subgroup_lpresentation(const LPresentation& L, const CosetTable& table, int ell_approx = 2);
SubgroupLPresentation subgroup_lpresentation(const LPresentation& L, const SubgroupRecord& rec, int ell_approx = 2);

/// Coset table of G' built from the regular action of the finite group G/G'.
struct DerivedSubgroup {
  CosetTable table;
  AbelianInvariants quotient;
  InducedCertificate certificate;
};
/// Requires a finite abelianization of order at most max_index.
std::optional<DerivedSubgroup> derived_subgroup(const LPresentation& L, std::size_t max_index);

struct DerivedBudget {
  std::size_t max_cumulative_index = std::size_t{1} << 20;
  double max_seconds = 0;
};

struct DerivedSeries {
  /// sections[i] = G^(i) / G^(i+1), starting with G / G'.
  std::vector<AbelianInvariants> sections;
  /// Index of G^(i+1) in G, one entry per finite section.
  std::vector<BigInt> cumulative_index;
  /// Generator counts of the subgroup presentations used.
  std::vector<std::size_t> ranks;
  bool exact = true;
  bool partial = false;
  std::string message;
};

DerivedSeries derived_series_sections(const LPresentation& L, int depth, const DerivedBudget& budget = {});

}  // namespace lpg
