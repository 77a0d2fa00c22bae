#pragma once

#include <string>
#include <vector>

#include "lpg/nq.hpp"

namespace lpg {

struct DwyerSeries {
  /// entries[c-1] = M_c(G), the image of the Schur multiplier in M(G / gamma_c G).
  std::vector<AbelianInvariants> entries;
  bool partial = false;
  std::string message;
};

/// Requires an invariant L-presentation.
///
/// With H = F/[K gamma_c F, F] the covering group of G/gamma_c G and
/// T = K gamma_c F/[K gamma_c F, F] its central tail subgroup, the image of
/// M(G) = (K cap F')/[K,F] in M(G/gamma_c G) is (K cap F')[K gamma_c F, F]/[K gamma_c F, F].
/// Since [K gamma_c F, F] lies in F', this equals S cap ker(T -> H/H'), where S is the image
/// of K in T, i.e. the substitution-closed span of the relator images.
DwyerSeries dwyer_quotients(const LPresentation& L, int c_max, const NqBudget& budget = {});

}  // namespace lpg
