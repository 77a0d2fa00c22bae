#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpg/word.hpp"

namespace lpg {

struct Substitution {
  std::string name;
  FreeEndomorphism map;
  bool operator==(const Substitution&) const = default;
};

/// Finite L-presentation <X | Q | Phi | R>.
class LPresentation {
 public:
  LPresentation() = default;
  /// Relator lists are freely reduced, stripped of identities and deduplicated
  /// (first occurrence kept). An ascending presentation is always invariant.
  LPresentation(Alphabet alphabet, std::vector<FreeWord> fixed, std::vector<Substitution> substitutions,
                std::vector<FreeWord> iterated, bool invariant = false);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }
  const std::vector<FreeWord>& fixed_relators() const noexcept { return fixed_; }
  const std::vector<Substitution>& substitutions() const noexcept { return substitutions_; }
  const std::vector<FreeWord>& iterated_relators() const noexcept { return iterated_; }
  bool ascending() const noexcept { return fixed_.empty(); }
  bool invariant() const noexcept { return invariant_; }

  bool operator==(const LPresentation&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<FreeWord> fixed_;
  std::vector<Substitution> substitutions_;
  std::vector<FreeWord> iterated_;
  bool invariant_ = true;
};

struct FinitePresentation {
  Alphabet alphabet;
  std::vector<FreeWord> relators;
  std::size_t rank() const noexcept { return alphabet.size(); }
};

struct PhiBallElement {
  /// Substitution indices i1..ik meaning sigma_i1 o ... o sigma_ik.
  std::vector<int> label;
  FreeEndomorphism map;
};

struct PhiBall {
  int depth = 0;
  std::vector<PhiBallElement> elements;
};

PhiBall phi_ball(const LPresentation& L, int depth);
FinitePresentation truncate(const LPresentation& L, int depth);

LPresentation preset_grigorchuk();
LPresentation preset_gamma(int d);

/// Drop identities and duplicates, keeping first occurrences.
std::vector<FreeWord> dedup_relators(const std::vector<FreeWord>& words);

}  // namespace lpg
