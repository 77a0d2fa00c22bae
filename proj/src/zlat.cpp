#include "lpg/zlat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace lpg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<BigVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

BigVector IntMatrix::row(std::size_t i) const {
  return BigVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

// ---------------------------------------------------------------- Lattice

namespace {

// v -= q * r over the nonzero positions of r.
void submul(BigVector& v, const BigInt& q, const BigVector& r, const std::vector<std::uint32_t>& support) {
  for (std::uint32_t k : support) mpz_submul(v[k].get_mpz_t(), q.get_mpz_t(), r[k].get_mpz_t());
}

std::vector<std::uint32_t> support_of(const BigVector& r) {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < r.size(); ++k)
    if (sgn(r[k]) != 0) out.push_back(static_cast<std::uint32_t>(k));
  return out;
}

}  // namespace

void Lattice::reduce_below(BigVector& v, std::size_t from_col) const {
  BigInt q;
  for (std::size_t c = from_col; c < n_; ++c) {
    long ri = pivot_row_[c];
    if (ri < 0 || sgn(v[c]) == 0) continue;
    const BigVector& r = rows_[static_cast<std::size_t>(ri)];
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), r[c].get_mpz_t());
    if (sgn(q) != 0) submul(v, q, r, support_[static_cast<std::size_t>(ri)]);
  }
}

bool Lattice::insert(BigVector v) {
  if (v.size() != n_) throw std::invalid_argument("lattice: dimension mismatch");
  bool grew = false;
  BigInt q, g, s, t, a, b, nr, nv;
  for (std::size_t col = 0; col < n_; ++col) {
    if (sgn(v[col]) == 0) continue;
    long ri = pivot_row_[col];
    if (ri < 0) {
      if (sgn(v[col]) < 0)
        for (auto& x : v) x = -x;
      reduce_below(v, col + 1);
      pivot_row_[col] = static_cast<long>(rows_.size());
      support_.push_back(support_of(v));
      rows_.push_back(std::move(v));
      canonical_ = false;
      return true;
    }
    BigVector& r = rows_[static_cast<std::size_t>(ri)];
    if (mpz_divisible_p(v[col].get_mpz_t(), r[col].get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), v[col].get_mpz_t(), r[col].get_mpz_t());
      submul(v, q, r, support_[static_cast<std::size_t>(ri)]);
      continue;
    }
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[col].get_mpz_t(), v[col].get_mpz_t());
    mpz_divexact(a.get_mpz_t(), r[col].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), v[col].get_mpz_t(), g.get_mpz_t());
    for (std::size_t k = col; k < n_; ++k) {
      nr = s * r[k] + t * v[k];
      nv = a * v[k] - b * r[k];
      r[k].swap(nr);
      v[k].swap(nv);
    }
    reduce_below(r, col + 1);
    support_[static_cast<std::size_t>(ri)] = support_of(r);
    canonical_ = false;
    grew = true;
  }
  return grew;
}

bool Lattice::contains(const BigVector& v0) const {
  if (v0.size() != n_) throw std::invalid_argument("lattice: dimension mismatch");
  BigVector v = v0;
  BigInt q;
  for (std::size_t col = 0; col < n_; ++col) {
    if (sgn(v[col]) == 0) continue;
    long ri = pivot_row_[col];
    if (ri < 0) return false;
    const BigVector& r = rows_[static_cast<std::size_t>(ri)];
    if (!mpz_divisible_p(v[col].get_mpz_t(), r[col].get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), v[col].get_mpz_t(), r[col].get_mpz_t());
    submul(v, q, r, support_[static_cast<std::size_t>(ri)]);
  }
  return true;
}

BigVector Lattice::reduce(BigVector v) const {
  if (v.size() != n_) throw std::invalid_argument("lattice: dimension mismatch");
  canonicalize();
  reduce_below(v, 0);
  return v;
}

void Lattice::canonicalize() const {
  if (canonical_) return;
  for (std::size_t col = n_; col-- > 0;) {
    long ri = pivot_row_[col];
    if (ri < 0) continue;
    auto i = static_cast<std::size_t>(ri);
    reduce_below(rows_[i], col + 1);
    support_[i] = support_of(rows_[i]);
  }
  canonical_ = true;
}

IntMatrix Lattice::basis() const {
  canonicalize();
  IntMatrix m(rows_.size(), n_);
  std::size_t i = 0;
  for (std::size_t col = 0; col < n_; ++col) {
    long ri = pivot_row_[col];
    if (ri < 0) continue;
    for (std::size_t k = 0; k < n_; ++k) m(i, k) = rows_[static_cast<std::size_t>(ri)][k];
    ++i;
  }
  return m;
}

std::vector<std::size_t> Lattice::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t col = 0; col < n_; ++col)
    if (pivot_row_[col] >= 0) p.push_back(col);
  return p;
}

BigInt Lattice::pivot_value(std::size_t j) const {
  long ri = pivot_row_.at(j);
  return ri < 0 ? BigInt(0) : rows_[static_cast<std::size_t>(ri)][j];
}

const BigVector& Lattice::pivot_row(std::size_t j) const {
  long ri = pivot_row_.at(j);
  if (ri < 0) throw std::out_of_range("no pivot in column");
  canonicalize();
  return rows_[static_cast<std::size_t>(ri)];
}

bool Lattice::operator==(const Lattice& other) const {
  return n_ == other.n_ && basis() == other.basis();
}

Lattice hnf(const IntMatrix& m) {
  Lattice L(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) L.insert(m.row(i));
  return L;
}

// ---------------------------------------------------------------- invariants

namespace {

std::vector<std::pair<BigInt, unsigned>> factorize(BigInt n) {
  std::vector<std::pair<BigInt, unsigned>> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
    if (p > 1000000 && mpz_probab_prime_p(n.get_mpz_t(), 30)) break;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

BigInt AbelianInvariants::order() const {
  if (free_rank) return 0;
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::size_t AbelianInvariants::p_rank(long p) const {
  std::size_t r = 0;
  for (const auto& d : torsion)
    if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) ++r;
  return r + free_rank;
}

std::vector<BigInt> AbelianInvariants::primary_factors() const {
  std::vector<BigInt> out;
  for (const auto& d : torsion)
    for (const auto& [p, e] : factorize(d)) {
      BigInt q;
      mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e);
      out.push_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbelianInvariants::to_string() const {
  if (trivial()) return "1";
  std::string s;
  for (const auto& d : torsion) {
    if (!s.empty()) s += " x ";
    s += "Z" + d.get_str();
  }
  if (free_rank) {
    if (!s.empty()) s += " x ";
    s += "Z";
    if (free_rank > 1) s += "^" + std::to_string(free_rank);
  }
  return s;
}

AbelianInvariants invariants_from_orders(const std::vector<BigInt>& orders) {
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) m(i, i) = orders[i];
  return snf(m);
}

namespace {

int abs_less_cmp(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct SnfResult {
  std::vector<BigInt> diag;   // length min(r,k) prefix, nonzero entries first
  IntMatrix V;                // k x k column transform
};

SnfResult smith(IntMatrix A) {
  const std::size_t r = A.rows(), k = A.cols();
  IntMatrix V(k, k);
  for (std::size_t i = 0; i < k; ++i) V(i, i) = 1;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < k; ++c) std::swap(A(i, c), A(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t x = 0; x < r; ++x) std::swap(A(x, i), A(x, j));
    for (std::size_t x = 0; x < k; ++x) std::swap(V(x, i), V(x, j));
  };
  BigInt q;
  std::vector<BigInt> diag;
  std::size_t t = 0;
  for (; t < std::min(r, k); ++t) {
    // pivot of least absolute value
    std::size_t bi = r, bj = k;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < k; ++j)
        if (sgn(A(i, j)) != 0 && (bi == r || abs_less_cmp(A(i, j), A(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == r) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (sgn(A(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        for (std::size_t c = t; c < k; ++c) A(i, c) -= q * A(t, c);
        if (sgn(A(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (sgn(A(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        for (std::size_t x = t; x < r; ++x) A(x, j) -= q * A(x, t);
        for (std::size_t x = 0; x < k; ++x) V(x, j) -= q * V(x, t);
        if (sgn(A(t, j)) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (sgn(A(i, t)) != 0 && abs_less_cmp(A(i, t), A(bi2, bj2)) < 0) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < k; ++j)
          if (sgn(A(t, j)) != 0 && abs_less_cmp(A(t, j), A(bi2, bj2)) < 0) {
            bi2 = t;
            bj2 = j;
          }
        swap_rows(t, bi2);
        swap_cols(t, bj2);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < k; ++c) A(t, c) += A(i, c);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (sgn(A(t, t)) < 0) A(t, t) = -A(t, t);
    diag.push_back(A(t, t));
  }
  return {std::move(diag), std::move(V)};
}

}  // namespace

AbelianMap cokernel_map(const Lattice& L) {
  const std::size_t n = L.ambient();
  IntMatrix B = L.basis();
  auto piv = L.pivots();
  std::vector<char> unit(n, 0);
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (B(i, piv[i]) == 1) unit[piv[i]] = 1;
  std::vector<std::size_t> J;
  std::vector<long> jpos(n, -1);
  for (std::size_t c = 0; c < n; ++c)
    if (!unit[c]) {
      jpos[c] = static_cast<long>(J.size());
      J.push_back(c);
    }
  const std::size_t k = J.size();
  std::vector<std::size_t> hard_rows;
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (!unit[piv[i]]) hard_rows.push_back(i);
  IntMatrix S(hard_rows.size(), k);
  for (std::size_t a = 0; a < hard_rows.size(); ++a)
    for (std::size_t b = 0; b < k; ++b) S(a, b) = B(hard_rows[a], J[b]);
  SnfResult sr = smith(std::move(S));

  AbelianMap out;
  std::vector<std::size_t> coords;  // kept columns of V
  for (std::size_t i = 0; i < sr.diag.size(); ++i)
    if (sr.diag[i] != 1) {
      coords.push_back(i);
      out.orders.push_back(sr.diag[i]);
      out.invariants.torsion.push_back(sr.diag[i]);
    }
  for (std::size_t i = sr.diag.size(); i < k; ++i) {
    coords.push_back(i);
    out.orders.push_back(0);
  }
  out.invariants.free_rank = k - sr.diag.size();

  // e_j in J-coordinates, then times V.
  std::vector<BigVector> jvec(n);
  for (std::size_t c = 0; c < n; ++c) {
    BigVector x(k);
    if (jpos[c] >= 0) {
      x[static_cast<std::size_t>(jpos[c])] = 1;
    } else {
      const BigVector& row = L.pivot_row(c);
      for (std::size_t b = 0; b < k; ++b) x[b] = -row[J[b]];
    }
    BigVector y(coords.size());
    for (std::size_t a = 0; a < coords.size(); ++a) {
      BigInt s = 0;
      for (std::size_t b = 0; b < k; ++b)
        if (sgn(x[b]) != 0) s += x[b] * sr.V(b, coords[a]);
      if (sgn(out.orders[a]) != 0) mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), out.orders[a].get_mpz_t());
      y[a] = std::move(s);
    }
    out.images.push_back(std::move(y));
  }
  return out;
}

BigVector AbelianMap::apply(const BigVector& v) const {
  BigVector y(orders.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    for (std::size_t a = 0; a < orders.size(); ++a) y[a] += v[j] * images[j][a];
  }
  for (std::size_t a = 0; a < orders.size(); ++a)
    if (sgn(orders[a]) != 0) mpz_fdiv_r(y[a].get_mpz_t(), y[a].get_mpz_t(), orders[a].get_mpz_t());
  return y;
}

AbelianInvariants cokernel_invariants(const Lattice& L) {
  const std::size_t n = L.ambient();
  IntMatrix B = L.basis();
  auto piv = L.pivots();
  std::vector<char> unit(n, 0);
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (B(i, piv[i]) == 1) unit[piv[i]] = 1;
  std::vector<std::size_t> J;
  for (std::size_t c = 0; c < n; ++c)
    if (!unit[c]) J.push_back(c);
  std::vector<std::size_t> hard_rows;
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (!unit[piv[i]]) hard_rows.push_back(i);
  IntMatrix S(hard_rows.size(), J.size());
  for (std::size_t a = 0; a < hard_rows.size(); ++a)
    for (std::size_t b = 0; b < J.size(); ++b) S(a, b) = B(hard_rows[a], J[b]);
  SnfResult sr = smith(std::move(S));
  AbelianInvariants inv;
  for (const auto& d : sr.diag)
    if (d != 1) inv.torsion.push_back(d);
  inv.free_rank = J.size() - sr.diag.size();
  return inv;
}

AbelianInvariants snf(const IntMatrix& m) { return cokernel_invariants(hnf(m)); }

// ---------------------------------------------------------------- spinning

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("action matrix must be square");
  SparseMatrix s;
  s.n = m.rows();
  s.rows.resize(s.n);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < s.n; ++j)
      if (sgn(m(i, j)) != 0) s.rows[i].emplace_back(j, m(i, j));
  return s;
}

BigVector SparseMatrix::right_apply(const BigVector& v) const {
  if (v.size() != n) throw std::invalid_argument("action: dimension mismatch");
  BigVector w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (const auto& [j, a] : rows[i]) mpz_addmul(w[j].get_mpz_t(), v[i].get_mpz_t(), a.get_mpz_t());
  }
  return w;
}

Lattice spin_closure(const std::vector<BigVector>& seed, const std::vector<SparseMatrix>& actions,
                     std::size_t ambient) {
  Lattice L(ambient);
  std::deque<BigVector> work;
  for (const auto& v : seed)
    if (L.insert(v)) work.push_back(v);
  while (!work.empty()) {
    BigVector v = std::move(work.front());
    work.pop_front();
    for (const auto& A : actions) {
      BigVector w = A.right_apply(v);
      if (L.insert(w)) work.push_back(std::move(w));
    }
  }
  return L;
}

Lattice spin_closure(const std::vector<BigVector>& seed, const std::vector<IntMatrix>& actions) {
  std::size_t n = 0;
  if (!seed.empty()) n = seed.front().size();
  else if (!actions.empty()) n = actions.front().rows();
  std::vector<SparseMatrix> sp;
  for (const auto& a : actions) {
    if (a.rows() != n) throw std::invalid_argument("action: dimension mismatch");
    sp.push_back(SparseMatrix::from_dense(a));
  }
  return spin_closure(seed, sp, n);
}

std::vector<BigVector> left_kernel(const IntMatrix& m) {
  const std::size_t r = m.rows(), n = m.cols();
  Lattice L(n + r);
  for (std::size_t i = 0; i < r; ++i) {
    BigVector v(n + r);
    for (std::size_t j = 0; j < n; ++j) v[j] = m(i, j);
    v[n + i] = 1;
    L.insert(std::move(v));
  }
  std::vector<BigVector> out;
  IntMatrix B = L.basis();
  auto piv = L.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (piv[i] >= n) {
      BigVector y(r);
      for (std::size_t j = 0; j < r; ++j) y[j] = B(i, n + j);
      out.push_back(std::move(y));
    }
  return out;
}

}  // namespace lpg
