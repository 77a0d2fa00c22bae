#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpg/zlat.hpp"

namespace lpg {

using Exp = std::int64_t;

struct GenPower {
  int gen;  // 0-based pc generator
  Exp exp;
  bool operator==(const GenPower&) const = default;
};

/// Sparse pc word a_{g1}^{e1} a_{g2}^{e2} ... (not necessarily normal).
using PcWord = std::vector<GenPower>;
/// Normal form a_0^{e_0} ... a_{m-1}^{e_{m-1}} as its exponent vector.
using ExpVector = std::vector<Exp>;

/// How a pc generator was introduced.
struct PcDefinition {
  enum class Kind { none, image, commutator, tail };
  Kind kind = Kind::none;
  int a = -1;  // image: L-generator (0-based); commutator [a_a, a_b]; tail: relation code
  int b = -1;
  int c = -1;
  bool operator==(const PcDefinition&) const = default;
};

struct ConsistencyViolation {
  std::string test;
  ExpVector lhs, rhs;
};

/// Polycyclic presentation with weights and an epimorphism from a free group.
class PcPresentation {
 public:
  PcPresentation() = default;
  explicit PcPresentation(int num_gens);

  int size() const noexcept { return m_; }

  /// Relative order of a_g: 0 means infinite.
  Exp relative_order(int g) const { return orders_.at(static_cast<std::size_t>(g)); }
  /// a_g^{order} = rhs, rhs a normal word in later generators.
  void set_power(int g, Exp order, PcWord rhs);
  const PcWord& power_rhs(int g) const { return power_.at(static_cast<std::size_t>(g)); }

  /// a_j^{a_i} = rhs (i < j), rhs normal, starting with a_j.
  void set_conjugate(int i, int j, PcWord rhs);
  /// a_j^{a_i^-1} = rhs; only used when a_i has infinite order.
  void set_conjugate_inverse(int i, int j, PcWord rhs);
  const PcWord& conjugate_rhs(int i, int j) const;
  const PcWord& conjugate_inverse_rhs(int i, int j) const;
  bool conjugate_trivial(int i, int j) const { return conj_[idx(i, j)].empty(); }
  bool conjugate_inverse_trivial(int i, int j) const { return conj_inv_[idx(i, j)].empty(); }

  int weight(int g) const { return weights_.at(static_cast<std::size_t>(g)); }
  void set_weight(int g, int w) { weights_.at(static_cast<std::size_t>(g)) = w; }
  const PcDefinition& definition(int g) const { return defs_.at(static_cast<std::size_t>(g)); }
  void set_definition(int g, PcDefinition d) { defs_.at(static_cast<std::size_t>(g)) = d; }

  /// Images of the free generators x_1..x_n as normal words.
  const std::vector<ExpVector>& epimorphism() const noexcept { return epi_; }
  void set_epimorphism(std::vector<ExpVector> images) { epi_ = std::move(images); }

  /// First generator of the trailing central block.
  int central_start() const;

  ExpVector identity() const { return ExpVector(static_cast<std::size_t>(m_), 0); }
  ExpVector collect(const PcWord& w) const;
  /// e := e * w
  void multiply(ExpVector& e, const PcWord& w) const;
  ExpVector product(const ExpVector& u, const ExpVector& v) const;
  ExpVector inverse(const ExpVector& u) const;
  ExpVector power(const ExpVector& u, Exp k) const;
  ExpVector commutator(const ExpVector& u, const ExpVector& v) const;
  ExpVector conjugate(const ExpVector& u, const ExpVector& t) const;

  std::vector<ConsistencyViolation> consistency_check() const;

  /// Finite product of relative orders, or 0 when some order is infinite.
  BigInt order() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j); }
  struct Frame;
  void mul_gen(ExpVector& e, int g, Exp x, std::vector<Frame>& stack) const;
  void normalize_central(ExpVector& e) const;

  int m_ = 0;
  std::vector<Exp> orders_;
  std::vector<PcWord> power_;
  std::vector<PcWord> conj_;      // empty = trivial
  std::vector<PcWord> conj_inv_;  // empty = trivial
  std::vector<int> weights_;
  std::vector<PcDefinition> defs_;
  std::vector<ExpVector> epi_;
  mutable int central_start_ = -1;
};

/// Sparse view of a normal word.
PcWord to_word(const ExpVector& e);
PcWord inverse_word(const PcWord& w);

/// P / <S>, S a lattice over the trailing generators first..m-1, which must be
/// central. Generators that become trivial are removed.
struct CentralQuotient {
  PcPresentation P;
  /// Old generator index -> new index or -1.
  std::vector<int> gen_map;
};
CentralQuotient quotient_by_central(const PcPresentation& P, int first, const Lattice& S);

}  // namespace lpg
