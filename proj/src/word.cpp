#include "lpg/word.hpp"

#include <stdexcept>

namespace lpg {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty generator name");
    if (!index_.emplace(names_[i], static_cast<int>(i + 1)).second)
      throw std::invalid_argument("duplicate generator '" + names_[i] + "'");
  }
}

std::optional<int> Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_rank(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

FreeWord FreeWord::reduce(std::size_t rank, std::span<const Letter> raw) {
  FreeWord w(rank);
  w.letters_.reserve(raw.size());
  for (Letter x : raw) {
    if (x == 0 || static_cast<std::size_t>(x < 0 ? -x : x) > rank)
      throw std::out_of_range("letter index out of range");
    w.push_back(x);
  }
  return w;
}

FreeWord FreeWord::generator(std::size_t rank, int index) {
  FreeWord w(rank);
  if (index == 0 || static_cast<std::size_t>(index < 0 ? -index : index) > rank)
    throw std::out_of_range("generator index out of range");
  w.letters_.push_back(index);
  return w;
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  check_rank(u, v);
  FreeWord w = u;
  for (Letter x : v.letters()) w.push_back(x);
  return w;
}

FreeWord invert(const FreeWord& u) {
  FreeWord w(u.rank());
  auto ls = u.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) w.push_back(-*it);
  return w;
}

FreeWord conjugate(const FreeWord& u, const FreeWord& t) {
  check_rank(u, t);
  return invert(t) * u * t;
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  check_rank(u, v);
  return invert(u) * invert(v) * u * v;
}

FreeWord power(const FreeWord& u, long k) { return power(u, BigInt(k)); }

FreeWord power(const FreeWord& u, const BigInt& k) {
  if (u.is_identity() || k == 0) return FreeWord(u.rank());
  FreeWord base = k < 0 ? invert(u) : u;
  BigInt n = abs(k);
  // u = p c p^-1 with c cyclically reduced; u^n = p c^n p^-1.
  auto ls = base.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  constexpr std::size_t kMaxLength = std::size_t{1} << 28;
  BigInt total = BigInt(static_cast<unsigned long>(hi - lo)) * n + 2 * lo;
  if (total > BigInt(static_cast<unsigned long>(kMaxLength)))
    throw std::length_error("power: word too long");
  unsigned long reps = n.get_ui();
  FreeWord w(u.rank());
  for (std::size_t i = 0; i < lo; ++i) w.push_back(ls[i]);
  for (unsigned long r = 0; r < reps; ++r)
    for (std::size_t i = lo; i < hi; ++i) w.push_back(ls[i]);
  for (std::size_t i = hi; i < ls.size(); ++i) w.push_back(ls[i]);
  return w;
}

FreeWord cyclically_reduce(const FreeWord& u) {
  auto ls = u.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord::reduce(u.rank(), ls.subspan(lo, hi - lo));
}

std::string to_string(const FreeWord& w, const Alphabet& a) {
  if (w.rank() != a.size()) throw std::invalid_argument("alphabet mismatch");
  if (w.is_identity()) return "1";
  std::string out;
  auto ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long e = static_cast<long>(j - i) * (ls[i] < 0 ? -1 : 1);
    if (!out.empty()) out += '*';
    out += a.name(static_cast<std::size_t>(ls[i] < 0 ? -ls[i] : ls[i]));
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

FreeEndomorphism::FreeEndomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  for (const auto& w : images_)
    if (w.rank() != images_.size()) throw std::invalid_argument("alphabet mismatch");
}

FreeEndomorphism FreeEndomorphism::identity(std::size_t rank) {
  std::vector<FreeWord> images;
  images.reserve(rank);
  for (std::size_t i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, static_cast<int>(i)));
  return FreeEndomorphism(std::move(images));
}

FreeWord apply(const FreeEndomorphism& sigma, const FreeWord& w) {
  if (sigma.rank() != w.rank()) throw std::invalid_argument("alphabet mismatch");
  FreeWord out(w.rank());
  for (Letter x : w.letters()) {
    auto img = sigma.image(x < 0 ? -x : x).letters();
    if (x > 0) {
      for (Letter y : img) out.push_back(y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
    }
  }
  return out;
}

FreeEndomorphism compose(const FreeEndomorphism& sigma, const FreeEndomorphism& tau) {
  if (sigma.rank() != tau.rank()) throw std::invalid_argument("alphabet mismatch");
  std::vector<FreeWord> images;
  images.reserve(tau.rank());
  for (const auto& t : tau.images()) images.push_back(apply(sigma, t));
  return FreeEndomorphism(std::move(images));
}

std::size_t FreeWordHash::operator()(const FreeWord& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ w.rank();
  for (Letter x : w.letters()) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace lpg
