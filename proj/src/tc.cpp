#include "lpg/tc.hpp"

#include <stdexcept>

#include "lpg/budget.hpp"

namespace lpg {

CosetTable::CosetTable(std::size_t rank, std::size_t num_cosets)
    : rank_(rank), num_cosets_(num_cosets), data_(2 * rank * num_cosets, 0) {}

std::optional<std::uint32_t> CosetTable::trace(std::uint32_t coset, const FreeWord& w) const {
  if (coset == 0 || coset > num_cosets_) throw std::out_of_range("trace: coset out of range");
  if (w.rank() != rank_) throw std::invalid_argument("trace: alphabet mismatch");
  std::uint32_t c = coset;
  for (Letter x : w.letters()) {
    c = get(c, column(x));
    if (c == 0) return std::nullopt;
  }
  return c;
}

std::optional<std::uint32_t> trace(const CosetTable& t, std::uint32_t coset, const FreeWord& w) {
  return t.trace(coset, w);
}

void CosetTable::standardize() {
  const std::size_t cols = columns();
  std::vector<std::uint32_t> new_of(num_cosets_ + 1, 0), old_of;
  old_of.reserve(num_cosets_ + 1);
  old_of.push_back(0);
  if (num_cosets_ == 0) return;
  new_of[1] = 1;
  old_of.push_back(1);
  for (std::size_t k = 1; k < old_of.size(); ++k) {
    std::uint32_t c = old_of[k];
    for (std::size_t x = 0; x < cols; ++x) {
      std::uint32_t d = get(c, x);
      if (d != 0 && new_of[d] == 0) {
        new_of[d] = static_cast<std::uint32_t>(old_of.size());
        old_of.push_back(d);
      }
    }
  }
  for (std::uint32_t c = 1; c <= num_cosets_; ++c)
    if (new_of[c] == 0) {
      new_of[c] = static_cast<std::uint32_t>(old_of.size());
      old_of.push_back(c);
    }
  std::vector<std::uint32_t> nd(data_.size());
  for (std::size_t k = 1; k <= num_cosets_; ++k)
    for (std::size_t x = 0; x < cols; ++x) {
      std::uint32_t d = get(old_of[k], x);
      nd[(k - 1) * cols + x] = d ? new_of[d] : 0;
    }
  data_.swap(nd);
}

bool CosetTable::closed() const {
  const std::size_t cols = columns();
  for (std::uint32_t c = 1; c <= num_cosets_; ++c)
    for (std::size_t x = 0; x < cols; ++x) {
      std::uint32_t d = get(c, x);
      if (d == 0 || d > num_cosets_ || get(d, x ^ 1) != c) return false;
    }
  return true;
}

std::string CosetTable::dump() const {
  std::string s;
  for (std::uint32_t c = 1; c <= num_cosets_; ++c) {
    s += std::to_string(c) + ":";
    for (std::size_t x = 0; x < columns(); ++x) s += " " + std::to_string(get(c, x));
    s += "\n";
  }
  return s;
}

PermRep perm_rep(const CosetTable& t) {
  if (!t.complete() || !t.closed()) throw std::invalid_argument("perm_rep: table incomplete");
  PermRep p;
  p.degree = t.size();
  p.perms.assign(t.rank(), std::vector<std::uint32_t>(t.size()));
  for (std::size_t g = 0; g < t.rank(); ++g)
    for (std::uint32_t c = 1; c <= t.size(); ++c) p.perms[g][c - 1] = t.get(c, 2 * g) - 1;
  return p;
}

namespace {

class Hlt {
 public:
  Hlt(const FinitePresentation& fp, const std::vector<FreeWord>& subgens, const CosetLimits& limits)
      : cols_(2 * fp.rank()), cap_(limits.max_cosets), deadline_(limits.max_seconds) {
    if (cap_ < 1) throw std::invalid_argument("max_cosets must be positive");
    for (const auto& r : fp.relators) rels_.push_back(columns_of(cyclically_reduce(r)));
    for (const auto& s : subgens) {
      if (s.rank() != fp.rank()) throw std::invalid_argument("subgroup generator over wrong alphabet");
      subs_.push_back(columns_of(s));
    }
    grow(std::min<std::size_t>(cap_, 1024));
    next_ = 1;
    parent_[1] = 1;
  }

  CosetTable run() {
    for (const auto& w : subs_)
      while (!scan_and_fill(1, w))
        if (!make_room()) return finish(TableStatus::exceeded);
    for (std::uint32_t c = 1; c <= next_; ++c) {
      if (parent_[c] != c) continue;
      for (std::size_t r = 0; r < rels_.size() && parent_[c] == c;) {
        if (scan_and_fill(c, rels_[r])) {
          ++r;
          continue;
        }
        if (!make_room(&c)) return finish(TableStatus::exceeded);
      }
      if (parent_[c] != c) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (E(c, x) != 0) continue;
        if (!define(c, x)) {
          if (!make_room(&c)) return finish(TableStatus::exceeded);
          if (parent_[c] != c) break;
          --x;
        }
      }
      if (timed_out()) return finish(TableStatus::exceeded);
    }
    return finish(TableStatus::complete);
  }

 private:
  std::vector<std::uint32_t> columns_of(const FreeWord& w) const {
    std::vector<std::uint32_t> out;
    for (Letter x : w.letters()) out.push_back(static_cast<std::uint32_t>(CosetTable::column(x)));
    return out;
  }

  std::uint32_t& E(std::uint32_t c, std::size_t x) { return table_[c * cols_ + x]; }

  void grow(std::size_t rows) {
    if (rows + 1 <= parent_.size()) return;
    table_.resize((rows + 1) * cols_, 0);
    parent_.resize(rows + 1, 0);
  }

  bool timed_out() {
    if (++tick_ % 1024 != 0) return false;
    return deadline_.expired();
  }

  bool define(std::uint32_t c, std::size_t x) {
    if (next_ >= cap_) return false;
    std::uint32_t d = ++next_;
    if (d + 1 > parent_.size()) grow(std::min<std::size_t>(cap_, 2 * parent_.size()));
    std::fill(table_.begin() + static_cast<long>(d * cols_), table_.begin() + static_cast<long>((d + 1) * cols_), 0);
    parent_[d] = d;
    E(c, x) = d;
    E(d, x ^ 1) = c;
    return true;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      std::uint32_t nx = parent_[c];
      parent_[c] = r;
      c = nx;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    std::uint32_t a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      std::uint32_t g = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::uint32_t d = E(g, x);
        if (d == 0) continue;
        E(d, x ^ 1) = 0;
        std::uint32_t mu = rep(g), nu = rep(d);
        if (E(mu, x) != 0)
          merge(nu, E(mu, x));
        else if (E(nu, x ^ 1) != 0)
          merge(mu, E(nu, x ^ 1));
        else {
          E(mu, x) = nu;
          E(nu, x ^ 1) = mu;
        }
      }
    }
  }

  // Returns false when a definition was needed but no room was left.
  bool scan_and_fill(std::uint32_t a, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return true;
    std::uint32_t f = a, b = a;
    std::size_t i = 0, j = w.size() - 1;
    for (;;) {
      while (i <= j && E(f, w[i]) != 0) {
        f = E(f, w[i]);
        if (i == j) {  // forward scan complete
          if (f != a) coincidence(f, a);
          return true;
        }
        ++i;
      }
      while (j >= i && E(b, w[j] ^ 1) != 0) {
        b = E(b, w[j] ^ 1);
        if (j == i) {
          coincidence(f, b);
          return true;
        }
        --j;
      }
      if (i == j) {
        E(f, w[i]) = b;
        E(b, w[i] ^ 1) = f;
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  void scan_only(std::uint32_t a, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = a, b = a;
    std::size_t i = 0, j = w.size() - 1;
    while (i <= j && E(f, w[i]) != 0) {
      f = E(f, w[i]);
      if (i == j) {
        if (f != a) coincidence(f, a);
        return;
      }
      ++i;
    }
    while (j >= i && E(b, w[j] ^ 1) != 0) {
      b = E(b, w[j] ^ 1);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      --j;
    }
    if (i == j) {
      E(f, w[i]) = b;
      E(b, w[i] ^ 1) = f;
    }
  }

  // Lookahead over all live cosets, then compaction. `cursor` is renumbered.
  bool make_room(std::uint32_t* cursor = nullptr) {
    for (std::uint32_t c = 1; c <= next_; ++c) {
      for (const auto& r : rels_) {
        if (parent_[c] != c) break;
        scan_only(c, r);
      }
      if (deadline_.expired()) return false;
    }
    std::uint32_t before = next_;
    compact(cursor);
    return next_ < before && next_ < cap_;
  }

  void compact(std::uint32_t* cursor) {
    std::vector<std::uint32_t> new_of(next_ + 1, 0);
    std::uint32_t k = 0;
    for (std::uint32_t c = 1; c <= next_; ++c)
      if (parent_[c] == c) new_of[c] = ++k;
    if (cursor) {
      std::uint32_t c = *cursor;
      while (c <= next_ && parent_[c] != c) ++c;
      // The main loop increments after this coset is handled; keep it pointing at a live coset.
      *cursor = c <= next_ ? new_of[c] : k + 1;
    }
    for (std::uint32_t c = 1; c <= next_; ++c) {
      if (parent_[c] != c) continue;
      std::uint32_t nc = new_of[c];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::uint32_t d = E(c, x);
        table_[nc * cols_ + x] = d ? new_of[rep(d)] : 0;
      }
    }
    for (std::uint32_t c = 1; c <= k; ++c) parent_[c] = c;
    next_ = k;
  }

  CosetTable finish(TableStatus st) {
    compact(nullptr);
    if (st == TableStatus::complete) {
      for (std::uint32_t c = 1; c <= next_ && st == TableStatus::complete; ++c)
        for (std::size_t x = 0; x < cols_; ++x)
          if (E(c, x) == 0) {
            st = TableStatus::incomplete;
            break;
          }
    }
    CosetTable t(cols_ / 2, next_);
    for (std::uint32_t c = 1; c <= next_; ++c)
      for (std::size_t x = 0; x < cols_; ++x) t.set(c, x, E(c, x));
    t.set_status(st);
    if (st == TableStatus::complete) t.standardize();
    return t;
  }

  std::size_t cols_;
  std::size_t cap_;
  Deadline deadline_;
  std::vector<std::vector<std::uint32_t>> rels_, subs_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::uint32_t next_ = 0;
  std::size_t tick_ = 0;
};

}  // namespace

CosetTable enumerate(const FinitePresentation& fp, const std::vector<FreeWord>& subgens, const CosetLimits& limits) {
  Hlt h(fp, subgens, limits);
  return h.run();
}

}  // namespace lpg
