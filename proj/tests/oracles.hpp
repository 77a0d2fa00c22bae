#pragma once

// Independent oracles: finite groups from explicit permutations, and
// abelian invariants from determinantal divisors.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "lpg/zlat.hpp"

namespace oracle {

using Perm = std::vector<std::uint16_t>;

inline Perm mul(const Perm& p, const Perm& q) {  // apply p, then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint16_t>(i);
  return r;
}

inline Perm identity(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint16_t>(i);
  return r;
}

inline Perm pow(Perm p, long k) {
  Perm r = identity(p.size());
  for (long i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

inline Perm comm(const Perm& x, const Perm& y) { return mul(mul(inv(x), inv(y)), mul(x, y)); }

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

using Elements = std::unordered_set<Perm, PermHash>;

/// Subgroup generated by gens.
inline Elements closure(const std::vector<Perm>& gens, std::size_t n) {
  Elements seen{identity(n)};
  std::vector<Perm> queue{identity(n)};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : gens) {
      Perm h = mul(queue[q], g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  return seen;
}

/// Normal closure of S under conjugation by X.
inline Elements normal_closure(std::vector<Perm> S, const std::vector<Perm>& X, std::size_t n) {
  while (true) {
    Elements H = closure(S, n);
    bool grew = false;
    for (std::size_t i = 0, m = S.size(); i < m; ++i)
      for (const auto& x : X) {
        Perm c = mul(mul(inv(x), S[i]), x);
        if (!H.count(c)) {
          S.push_back(c);
          grew = true;
        }
      }
    if (!grew) return H;
  }
}

/// Primary factors (prime powers, sorted) of the abelian section N/M, M <= N, [N,N] <= M.
inline std::vector<long> section_primary(const Elements& N, const Elements& M) {
  long order = static_cast<long>(N.size() / M.size());
  std::vector<long> out;
  long rest = order;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    // count[j] = |A[p^j]|
    std::vector<long> atleast;
    long prev = 1, pj = 1;
    for (int j = 1; j <= e; ++j) {
      pj *= p;
      long cnt = 0;
      for (const auto& x : N)
        if (M.count(pow(x, pj))) ++cnt;
      cnt /= static_cast<long>(M.size());
      long ratio = cnt / prev, k = 0;
      while (ratio > 1) {
        ratio /= p;
        ++k;
      }
      atleast.push_back(k);
      prev = cnt;
    }
    atleast.push_back(0);
    long q = 1;
    for (int j = 1; j <= e; ++j) {
      q *= p;
      for (long c = 0; c < atleast[static_cast<std::size_t>(j - 1)] - atleast[static_cast<std::size_t>(j)]; ++c)
        out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Z_d wr Z_d acting on d*d points (block b, position i) -> b*d + i.
inline std::vector<Perm> wreath(int d) {
  const std::size_t n = static_cast<std::size_t>(d * d);
  Perm top(n), base = identity(n);
  for (int b = 0; b < d; ++b)
    for (int i = 0; i < d; ++i) top[static_cast<std::size_t>(b * d + i)] = static_cast<std::uint16_t>(((b + 1) % d) * d + i);
  for (int i = 0; i < d; ++i) base[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((i + 1) % d);
  return {top, base};
}

/// Lower central series sections gamma_k / gamma_{k+1} as primary factor lists, until the series stabilizes.
inline std::vector<std::vector<long>> lower_central_sections(const std::vector<Perm>& X, std::size_t n) {
  std::vector<std::vector<long>> out;
  std::vector<Perm> gens = X;
  Elements cur = closure(X, n);
  while (true) {
    std::vector<Perm> next;
    for (const auto& g : gens)
      for (const auto& x : X) next.push_back(comm(g, x));
    Elements nxt = normal_closure(next, X, n);
    if (nxt.size() == cur.size()) break;
    out.push_back(section_primary(cur, nxt));
    gens = next;
    cur = std::move(nxt);
  }
  return out;
}

using Mat = std::vector<std::vector<long long>>;

inline long long det(Mat a) {
  // fraction-free Bareiss elimination
  const std::size_t n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Cokernel invariants of the row lattice via determinantal divisors.
inline lpg::AbelianInvariants snf_by_minors(const Mat& m, std::size_t cols) {
  std::vector<long long> d{1};
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= std::min(m.size(), cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(m.size(), k, rs);
    subsets(cols, k, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Mat sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, std::llabs(det(sub)));
      }
    if (g == 0) break;
    d.push_back(g);
    rank = k;
  }
  lpg::AbelianInvariants inv;
  for (std::size_t k = 1; k <= rank; ++k) {
    long long s = d[k] / d[k - 1];
    if (s != 1) inv.torsion.push_back(lpg::BigInt(static_cast<long>(s)));
  }
  inv.free_rank = cols - rank;
  return inv;
}

inline lpg::IntMatrix to_int(const Mat& m, std::size_t cols) {
  lpg::IntMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = static_cast<long>(m[i][j]);
  return out;
}

inline Mat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  Mat m(r, std::vector<long long>(c));
  for (auto& row : m)
    for (auto& x : row) x = e(rng);
  return m;
}

}  // namespace oracle
