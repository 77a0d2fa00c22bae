#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpg/lpres.hpp"

namespace lpg {

enum class TableStatus { complete, incomplete, exceeded };

struct CosetLimits {
  std::size_t max_cosets = 1000000;
  double max_seconds = 0;  // 0 = unlimited
};

/// Action of a free group on cosets. Cosets are numbered from 1; entry 0 = undefined.
/// Column 2(i-1) holds generator i, column 2(i-1)+1 its inverse.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::size_t rank, std::size_t num_cosets);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t columns() const noexcept { return 2 * rank_; }
  std::size_t size() const noexcept { return num_cosets_; }
  TableStatus status() const noexcept { return status_; }
  void set_status(TableStatus s) noexcept { status_ = s; }
  bool complete() const noexcept { return status_ == TableStatus::complete; }
  /// Number of cosets when complete.
  std::size_t index() const noexcept { return num_cosets_; }

  static std::size_t column(Letter x) noexcept {
    return x > 0 ? 2 * static_cast<std::size_t>(x - 1) : 2 * static_cast<std::size_t>(-x - 1) + 1;
  }
  std::uint32_t get(std::size_t coset, std::size_t col) const { return data_[(coset - 1) * columns() + col]; }
  void set(std::size_t coset, std::size_t col, std::uint32_t v) { data_[(coset - 1) * columns() + col] = v; }
  const std::vector<std::uint32_t>& data() const noexcept { return data_; }

  std::optional<std::uint32_t> trace(std::uint32_t coset, const FreeWord& w) const;
  /// Renumber cosets in breadth-first order from coset 1 (columns in order).
  void standardize();
  /// True when every entry is defined and consistent.
  bool closed() const;

  bool operator==(const CosetTable& o) const { return rank_ == o.rank_ && num_cosets_ == o.num_cosets_ && data_ == o.data_; }
  bool operator<(const CosetTable& o) const {
    if (num_cosets_ != o.num_cosets_) return num_cosets_ < o.num_cosets_;
    return data_ < o.data_;
  }

  std::string dump() const;

 private:
  std::size_t rank_ = 0;
  std::size_t num_cosets_ = 0;
  std::vector<std::uint32_t> data_;
  TableStatus status_ = TableStatus::incomplete;
};

/// Permutation action, points 0..degree-1 (coset k is point k-1).
struct PermRep {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> perms;  // one per generator
  bool operator==(const PermRep&) const = default;
};

/// HLT coset enumeration with lookahead.
CosetTable enumerate(const FinitePresentation& fp, const std::vector<FreeWord>& subgens,
                     const CosetLimits& limits = {});
PermRep perm_rep(const CosetTable& t);
std::optional<std::uint32_t> trace(const CosetTable& t, std::uint32_t coset, const FreeWord& w);

}  // namespace lpg
