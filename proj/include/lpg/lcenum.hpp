#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpg/lpres.hpp"
#include "lpg/tc.hpp"

namespace lpg {

/// Outcome of deciding whether generator images in a finite permutation group
/// extend to a homomorphism of the L-presented group.
struct InducedCertificate {
  bool holds = false;
  /// Number of distinct maps pi o sigma, sigma in Phi*, visited.
  std::size_t closure_size = 0;
  /// Relator evaluations performed.
  std::size_t relators_checked = 0;
  /// When !holds: the failing relator and the substitution word leading to it.
  std::optional<FreeWord> witness;
  std::vector<int> witness_label;
  bool witness_fixed = false;
};

InducedCertificate check_induced(const LPresentation& L, const PermRep& images);

struct EnumerationPolicy {
  int ell_start = 1;
  int ell_max = 8;
  CosetLimits limits{};
};

struct CertifiedIndex {
  std::size_t index = 0;
  int ell_used = -1;
  CosetTable table;
  std::optional<InducedCertificate> certificate;
  bool certified = false;
  std::string message;
};

/// Iterative deepening over truncated covers; the first complete table whose
/// permutation action passes check_induced gives the exact index.
CertifiedIndex l_enumerate(const LPresentation& L, const std::vector<FreeWord>& subgens,
                           const EnumerationPolicy& policy = {});

}  // namespace lpg
