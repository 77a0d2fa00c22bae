#include "lpg/lowx.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "lpg/budget.hpp"
#include "lpg/rs.hpp"

namespace lpg {

std::map<std::size_t, std::size_t> LowIndexResult::counts(bool normal_only) const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& s : subgroups)
    if (!normal_only || s.is_normal) ++out[s.index];
  return out;
}

CosetTable reroot(const CosetTable& t, std::uint32_t k) {
  if (k == 0 || k > t.size()) throw std::out_of_range("reroot: coset out of range");
  const std::size_t n = t.size(), cols = t.columns();
  std::vector<std::uint32_t> new_of(n + 1, 0), old_of{0, k};
  new_of[k] = 1;
  for (std::size_t r = 1; r < old_of.size(); ++r)
    for (std::size_t x = 0; x < cols; ++x) {
      std::uint32_t v = t.get(old_of[r], x);
      if (v != 0 && new_of[v] == 0) {
        new_of[v] = static_cast<std::uint32_t>(old_of.size());
        old_of.push_back(v);
      }
    }
  if (old_of.size() != n + 1) throw std::invalid_argument("reroot: table not transitive");
  CosetTable out(t.rank(), n);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t x = 0; x < cols; ++x) {
      std::uint32_t v = t.get(old_of[r], x);
      out.set(r, x, v ? new_of[v] : 0);
    }
  out.set_status(t.status());
  return out;
}

bool is_normal_table(const CosetTable& t) {
  for (std::uint32_t k = 2; k <= t.size(); ++k)
    if (!(reroot(t, k) == t)) return false;
  return true;
}

namespace {

// Backtrack search for conjugacy-class representatives of subgroups of index <= N.
class Backtrack {
 public:
  Backtrack(const FinitePresentation& fp, std::size_t N, std::size_t max_len, const Deadline& dl)
      : cols_(2 * fp.rank()), N_(N), deadline_(dl) {
    T_.assign((N + 1) * cols_, 0);
    rots_.resize(cols_);
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& r0 : fp.relators) {
      FreeWord r = cyclically_reduce(r0);
      if (r.is_identity() || (max_len && r.length() > max_len)) continue;
      for (const FreeWord& w : {r, invert(r)}) {
        std::vector<std::uint32_t> cw;
        for (Letter x : w.letters()) cw.push_back(static_cast<std::uint32_t>(CosetTable::column(x)));
        for (std::size_t s = 0; s < cw.size(); ++s) {
          std::vector<std::uint32_t> rot(cw.begin() + static_cast<long>(s), cw.end());
          rot.insert(rot.end(), cw.begin(), cw.begin() + static_cast<long>(s));
          if (seen.insert(rot).second) rots_[rot[0]].push_back(std::move(rot));
        }
      }
    }
    stamp_.assign(N + 1, 0);
    newnum_.assign(N + 1, 0);
  }

  std::vector<CosetTable> run() {
    n_ = 1;
    search();
    return std::move(found_);
  }
  bool aborted() const { return aborted_; }

 private:
  std::uint32_t& E(std::uint32_t c, std::size_t x) { return T_[c * cols_ + x]; }

  void set(std::uint32_t c, std::size_t x, std::uint32_t d) {
    E(c, x) = d;
    E(d, x ^ 1) = c;
    trail_.emplace_back(c, x);
    queue_.emplace_back(c, x);
    queue_.emplace_back(d, x ^ 1);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [c, x] = trail_.back();
      trail_.pop_back();
      std::uint32_t d = E(c, x);
      E(c, x) = 0;
      E(d, x ^ 1) = 0;
    }
  }

  bool scan(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    const std::size_t len = w.size();
    std::uint32_t f = c;
    std::size_t i = 0;
    while (i < len && E(f, w[i]) != 0) f = E(f, w[i++]);
    if (i == len) return f == c;
    std::uint32_t b = c;
    std::size_t j = len - 1;
    while (j > i && E(b, w[j] ^ 1) != 0) b = E(b, w[j--] ^ 1);
    if (j > i) return true;
    if (E(b, w[i] ^ 1) != 0) return false;
    set(f, w[i], b);
    return true;
  }

  bool propagate() {
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      auto [c, x] = queue_[q];
      for (const auto& w : rots_[x])
        if (!scan(c, w)) {
          queue_.clear();
          return false;
        }
    }
    queue_.clear();
    return true;
  }

  // First-in-class test: no rerooting gives a smaller standardized table.
  bool canonical() {
    for (std::uint32_t k = 2; k <= n_; ++k) {
      ++epoch_;
      order_.clear();
      order_.push_back(k);
      stamp_[k] = epoch_;
      newnum_[k] = 1;
      bool decided = false;
      for (std::size_t r = 1; r <= order_.size() && !decided; ++r) {
        std::uint32_t o = order_[r - 1];
        for (std::size_t x = 0; x < cols_; ++x) {
          std::uint32_t v = E(o, x), orig = E(static_cast<std::uint32_t>(r), x);
          if (v == 0 || orig == 0) {
            decided = true;
            break;
          }
          if (stamp_[v] != epoch_) {
            stamp_[v] = epoch_;
            order_.push_back(v);
            newnum_[v] = static_cast<std::uint32_t>(order_.size());
          }
          std::uint32_t nv = newnum_[v];
          if (nv < orig) return false;
          if (nv > orig) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void search() {
    if (aborted_) return;
    if (++nodes_ % 4096 == 0 && deadline_.expired()) {
      aborted_ = true;
      return;
    }
    std::uint32_t c = 0;
    std::size_t x = 0;
    for (std::uint32_t k = 1; k <= n_ && c == 0; ++k)
      for (std::size_t y = 0; y < cols_; ++y)
        if (E(k, y) == 0) {
          c = k;
          x = y;
          break;
        }
    if (c == 0) {
      record();
      return;
    }
    for (std::uint32_t d = 1; d <= n_; ++d) {
      if (E(d, x ^ 1) != 0) continue;
      std::size_t mark = trail_.size();
      set(c, x, d);
      if (propagate() && canonical()) search();
      undo(mark);
      if (aborted_) return;
    }
    if (n_ < N_) {
      std::uint32_t d = static_cast<std::uint32_t>(++n_);
      std::size_t mark = trail_.size();
      set(c, x, d);
      if (propagate() && canonical()) search();
      undo(mark);
      --n_;
    }
  }

  void record() {
    CosetTable t(cols_ / 2, n_);
    for (std::uint32_t c = 1; c <= n_; ++c)
      for (std::size_t x = 0; x < cols_; ++x) t.set(c, x, E(c, x));
    t.set_status(TableStatus::complete);
    found_.push_back(std::move(t));
  }

  std::size_t cols_, N_;
  const Deadline& deadline_;
  std::vector<std::uint32_t> T_;
  std::vector<std::vector<std::vector<std::uint32_t>>> rots_;
  std::vector<std::pair<std::uint32_t, std::size_t>> trail_, queue_;
  std::vector<std::uint32_t> stamp_, newnum_, order_;
  std::uint32_t epoch_ = 0;
  std::size_t n_ = 1;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<CosetTable> found_;
};

void expand(const CosetTable& rep, std::set<CosetTable>& all, std::set<CosetTable>& normal) {
  std::set<CosetTable> conj;
  conj.insert(rep);
  for (std::uint32_t k = 2; k <= rep.size(); ++k) conj.insert(reroot(rep, k));
  if (conj.size() == 1) normal.insert(rep);
  all.insert(conj.begin(), conj.end());
}

LowIndexResult assemble(const std::vector<CosetTable>& reps, const std::vector<char>& keep, bool normal_only,
                        bool with_generators) {
  LowIndexResult res;
  std::set<CosetTable> all, normal;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (keep[i]) expand(reps[i], all, normal);
  for (const auto& t : all) {
    bool nrm = normal.count(t) > 0;
    if (normal_only && !nrm) continue;
    SubgroupRecord rec;
    rec.table = t;
    rec.index = t.size();
    rec.is_normal = nrm;
    if (with_generators) rec.generators = schreier(t).schreier_gens;
    res.subgroups.push_back(std::move(rec));
  }
  return res;
}

LowIndexResult run(const FinitePresentation& fp, const LPresentation* L, std::size_t n, const LowIndexPolicy& policy,
                   bool normal_only) {
  if (n < 1) throw std::invalid_argument("maximal index must be at least 1");
  Deadline dl(policy.max_seconds);
  Backtrack bt(fp, n, policy.max_relator_length, dl);
  std::vector<CosetTable> reps = bt.run();
  std::vector<char> keep(reps.size(), 1);
  if (L) {
    unsigned threads = std::max(1u, policy.threads);
    auto work = [&](unsigned id) {
      for (std::size_t i = id; i < reps.size(); i += threads) keep[i] = check_induced(*L, perm_rep(reps[i])).holds;
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
  }
  LowIndexResult res = assemble(reps, keep, normal_only, policy.with_generators);
  res.candidates = reps.size();
  res.refuted = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 0));
  res.ell_used = policy.ell;
  for (auto& s : res.subgroups) s.certified = L != nullptr;
  if (bt.aborted()) {
    res.partial = true;
    res.message = "time limit reached; list incomplete";
  }
  return res;
}

}  // namespace

LowIndexResult low_index_fp(const FinitePresentation& fp, std::size_t n, const LowIndexPolicy& policy) {
  return run(fp, nullptr, n, policy, false);
}

LowIndexResult low_index_subgroups(const LPresentation& L, std::size_t n, const LowIndexPolicy& policy) {
  return run(truncate(L, policy.ell), &L, n, policy, false);
}

LowIndexResult normal_subgroups(const LPresentation& L, std::size_t n, const LowIndexPolicy& policy) {
  return run(truncate(L, policy.ell), &L, n, policy, true);
}

}  // namespace lpg
