#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpg/budget.hpp"
#include "lpg/lpres.hpp"
#include "lpg/pcp.hpp"
#include "lpg/zlat.hpp"

namespace lpg {

struct NqBudget {
  double max_seconds = 0;     // 0 = unlimited
  std::size_t max_tails = 0;  // central rank of a covering step; 0 = unlimited
};

struct NilpotentQuotient {
  /// Highest class with a nontrivial section (sections.size()).
  int klass = 0;
  PcPresentation P;
  /// sections[k-1] = gamma_k / gamma_{k+1}
  std::vector<AbelianInvariants> sections;
  /// The last covering step produced a trivial layer.
  bool stabilized = false;
  /// A budget limit stopped the computation early.
  bool partial = false;
  std::string message;
};

/// Straight-line program over the free generators; used to pull pc relators back to words.
struct Slp {
  /// Line k is a product of (ref, exponent); ref >= 0 is an earlier line,
  /// ref < 0 is free generator -ref-1.
  std::vector<std::vector<std::pair<int, Exp>>> lines;
  std::vector<int> outputs;
};

/// Relators of a pc presentation (powers, conjugates, epimorphism kernel) as an SLP over X.
Slp pc_relators_slp(const PcPresentation& P, std::size_t rank);

/// One step of the lower central series computation for an invariant L-presentation.
class NqEngine {
 public:
  /// Requires L.invariant(). `extra` relators are evaluated alongside Q.
  explicit NqEngine(LPresentation L, Slp extra = {});

  struct Step {
    AbelianInvariants section;   // new layer gamma_{c+1}/gamma_{c+2}
    bool grew = false;
    std::size_t tails = 0;
    std::optional<AbelianInvariants> dwyer;  // M_{c+1}, when requested
  };

  /// Extends the class-c quotient to class c+1.
  Step extend(bool want_dwyer, const Deadline& deadline, std::size_t max_tails);

  const PcPresentation& quotient() const noexcept { return P_; }
  int klass() const noexcept { return klass_; }
  const LPresentation& presentation() const noexcept { return L_; }

 private:
  LPresentation L_;
  Slp extra_;
  PcPresentation P_;
  int klass_ = 0;
};

/// Relation lattice of G/G' inside Z^rank.
Lattice abelian_relation_lattice(const LPresentation& L);
AbelianInvariants abelian_quotient(const LPresentation& L);
NilpotentQuotient nilpotent_quotient(const LPresentation& L, int c, const NqBudget& budget = {});
std::optional<NilpotentQuotient> maximal_nilpotent_detect(const LPresentation& L, int c_max,
                                                          const NqBudget& budget = {});

/// Images of free words in the quotient: collect of epimorphism images.
ExpVector evaluate(const PcPresentation& P, const FreeWord& w);

}  // namespace lpg
