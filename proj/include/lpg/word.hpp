#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lpg/bigint.hpp"

namespace lpg {

/// Signed generator index: +i is generator i (1-based), -i its inverse.
using Letter = std::int32_t;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  /// Name of generator i, 1-based.
  const std::string& name(std::size_t i) const { return names_.at(i - 1); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// 1-based index, or nullopt.
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

/// Freely reduced word in the free group of a given rank.
class FreeWord {
 public:
  FreeWord() = default;
  /// Identity of the free group of rank `rank`.
  explicit FreeWord(std::size_t rank) : rank_(rank) {}

  static FreeWord reduce(std::size_t rank, std::span<const Letter> raw);
  static FreeWord reduce(std::size_t rank, std::initializer_list<Letter> raw) {
    return reduce(rank, std::span<const Letter>(raw.begin(), raw.size()));
  }
  static FreeWord generator(std::size_t rank, int index);

  std::size_t rank() const noexcept { return rank_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  auto operator<=>(const FreeWord&) const = default;
  bool operator==(const FreeWord&) const = default;

  /// Append one letter with cancellation. Caller guarantees bounds.
  void push_back(Letter x) {
    if (!letters_.empty() && letters_.back() == -x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);
/// t^-1 u t
FreeWord conjugate(const FreeWord& u, const FreeWord& t);
/// u^-1 v^-1 u v
FreeWord commutator(const FreeWord& u, const FreeWord& v);
FreeWord power(const FreeWord& u, const BigInt& k);
FreeWord power(const FreeWord& u, long k);
FreeWord cyclically_reduce(const FreeWord& u);

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return multiply(u, v); }

std::string to_string(const FreeWord& w, const Alphabet& a);

/// Endomorphism of a free group given by generator images.
class FreeEndomorphism {
 public:
  FreeEndomorphism() = default;
  explicit FreeEndomorphism(std::vector<FreeWord> images);
  static FreeEndomorphism identity(std::size_t rank);

  std::size_t rank() const noexcept { return images_.size(); }
  /// Image of generator i, 1-based.
  const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  auto operator<=>(const FreeEndomorphism&) const = default;
  bool operator==(const FreeEndomorphism&) const = default;

 private:
  std::vector<FreeWord> images_;
};

FreeWord apply(const FreeEndomorphism& sigma, const FreeWord& w);
/// sigma o tau: apply(compose(s, t), w) == apply(s, apply(t, w)).
FreeEndomorphism compose(const FreeEndomorphism& sigma, const FreeEndomorphism& tau);

struct FreeWordHash {
  std::size_t operator()(const FreeWord& w) const noexcept;
};

}  // namespace lpg
