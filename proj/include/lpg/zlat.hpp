#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpg/bigint.hpp"

namespace lpg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);
  static IntMatrix from_rows(std::size_t cols, const std::vector<BigVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  BigVector row(std::size_t i) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// Sublattice of Z^n kept as an echelon basis; canonical Hermite form on demand.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient) : n_(ambient), pivot_row_(ambient, -1) {}

  std::size_t ambient() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Adds v to the generating set. Returns true if the lattice grew.
  bool insert(BigVector v);
  bool contains(const BigVector& v) const;
  /// Canonical coset representative of v modulo the lattice.
  BigVector reduce(BigVector v) const;

  /// Row Hermite normal form: pivots increasing, positive, entries above reduced.
  IntMatrix basis() const;
  /// Pivot column of each basis row, in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Pivot value at column j, or 0 when j is not a pivot column.
  BigInt pivot_value(std::size_t j) const;
  /// Basis row whose pivot lies in column j (requires pivot_value(j) != 0).
  const BigVector& pivot_row(std::size_t j) const;

  bool operator==(const Lattice& other) const;

 private:
  void canonicalize() const;
  void reduce_below(BigVector& v, std::size_t from_col) const;

  std::size_t n_ = 0;
  mutable std::vector<BigVector> rows_;
  mutable std::vector<std::vector<std::uint32_t>> support_;  // nonzero columns of each row
  mutable std::vector<long> pivot_row_;  // column -> row index or -1
  mutable bool canonical_ = true;
};

struct AbelianInvariants {
  std::vector<BigInt> torsion;  // d1 | d2 | ... , each >= 2
  std::size_t free_rank = 0;

  bool operator==(const AbelianInvariants&) const = default;
  bool trivial() const { return torsion.empty() && free_rank == 0; }
  bool finite() const { return free_rank == 0; }
  /// Order when finite, 0 when infinite.
  BigInt order() const;
  /// Dimension of A/pA over GF(p).
  std::size_t p_rank(long p) const;
  /// Invariant factors from primary decomposition, sorted; e.g. Z2 x Z4 x Z4.
  std::vector<BigInt> primary_factors() const;
  std::string to_string() const;
};

/// Build invariants from arbitrary cyclic orders (0 = infinite, 1 dropped).
AbelianInvariants invariants_from_orders(const std::vector<BigInt>& orders);

Lattice hnf(const IntMatrix& m);
AbelianInvariants snf(const IntMatrix& m);
AbelianInvariants cokernel_invariants(const Lattice& L);

/// Explicit epimorphism Z^n -> Z^n / L onto a product of cyclic groups.
struct AbelianMap {
  AbelianInvariants invariants;
  /// Orders of the target factors, aligned with `images` coordinates:
  /// torsion factors first (0 never appears there), then free factors (order 0).
  std::vector<BigInt> orders;
  /// images[j] = coordinates of e_j, reduced modulo the finite orders.
  std::vector<BigVector> images;
  BigVector apply(const BigVector& v) const;
};

AbelianMap cokernel_map(const Lattice& L);

/// Sparse integer matrix acting on row vectors from the right.
struct SparseMatrix {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> rows;
  static SparseMatrix from_dense(const IntMatrix& m);
  BigVector right_apply(const BigVector& v) const;
};

Lattice spin_closure(const std::vector<BigVector>& seed, const std::vector<SparseMatrix>& actions,
                     std::size_t ambient);
Lattice spin_closure(const std::vector<BigVector>& seed, const std::vector<IntMatrix>& actions);

/// Basis of the integer left kernel {y : y M = 0}.
std::vector<BigVector> left_kernel(const IntMatrix& m);

}  // namespace lpg
