#include "lpg/pcp.hpp"

#include <stdexcept>

namespace lpg {

namespace {

Exp checked_add(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("pc exponent overflow");
  return r;
}

Exp checked_mul(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("pc exponent overflow");
  return r;
}

Exp mod_floor(Exp x, Exp m) {
  Exp r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

struct PcPresentation::Frame {
  const PcWord* word;
  GenPower letter;
  std::size_t pos;
  Exp reps;
  bool inverse;
};

PcPresentation::PcPresentation(int num_gens)
    : m_(num_gens),
      orders_(static_cast<std::size_t>(num_gens), 0),
      power_(static_cast<std::size_t>(num_gens)),
      conj_(static_cast<std::size_t>(num_gens) * static_cast<std::size_t>(num_gens)),
      conj_inv_(static_cast<std::size_t>(num_gens) * static_cast<std::size_t>(num_gens)),
      weights_(static_cast<std::size_t>(num_gens), 1),
      defs_(static_cast<std::size_t>(num_gens)),
      central_start_(0) {
  if (num_gens < 0) throw std::invalid_argument("negative generator count");
}

namespace {

void check_tail(const PcWord& w, int after, int m) {
  int last = after;
  for (const auto& gp : w) {
    if (gp.gen <= last || gp.gen >= m) throw std::invalid_argument("pc relation tail not normal in later generators");
    if (gp.exp == 0) throw std::invalid_argument("zero exponent in pc word");
    last = gp.gen;
  }
}

}  // namespace

void PcPresentation::set_power(int g, Exp order, PcWord rhs) {
  if (order < 0) throw std::invalid_argument("negative relative order");
  if (order == 0 && !rhs.empty()) throw std::invalid_argument("power relation on infinite generator");
  check_tail(rhs, g, m_);
  orders_.at(static_cast<std::size_t>(g)) = order;
  power_.at(static_cast<std::size_t>(g)) = std::move(rhs);
}

void PcPresentation::set_conjugate(int i, int j, PcWord rhs) {
  if (!(0 <= i && i < j && j < m_)) throw std::out_of_range("conjugate relation indices");
  if (rhs.size() == 1 && rhs[0] == GenPower{j, 1}) rhs.clear();
  if (!rhs.empty()) {
    if (rhs[0].gen != j || rhs[0].exp != 1) throw std::invalid_argument("conjugate must start with a_j");
    check_tail(PcWord(rhs.begin() + 1, rhs.end()), j, m_);
    central_start_ = std::max(central_start_, j + 1);
  }
  conj_[idx(i, j)] = std::move(rhs);
}

void PcPresentation::set_conjugate_inverse(int i, int j, PcWord rhs) {
  if (!(0 <= i && i < j && j < m_)) throw std::out_of_range("conjugate relation indices");
  if (rhs.size() == 1 && rhs[0] == GenPower{j, 1}) rhs.clear();
  if (!rhs.empty()) {
    if (rhs[0].gen != j || rhs[0].exp != 1) throw std::invalid_argument("conjugate must start with a_j");
    check_tail(PcWord(rhs.begin() + 1, rhs.end()), j, m_);
    central_start_ = std::max(central_start_, j + 1);
  }
  conj_inv_[idx(i, j)] = std::move(rhs);
}

const PcWord& PcPresentation::conjugate_rhs(int i, int j) const { return conj_.at(idx(i, j)); }
const PcWord& PcPresentation::conjugate_inverse_rhs(int i, int j) const { return conj_inv_.at(idx(i, j)); }

int PcPresentation::central_start() const { return central_start_; }

PcWord to_word(const ExpVector& e) {
  PcWord w;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) w.push_back({static_cast<int>(i), e[i]});
  return w;
}

PcWord inverse_word(const PcWord& w) {
  PcWord r(w.rbegin(), w.rend());
  for (auto& gp : r) gp.exp = -gp.exp;
  return r;
}

void PcPresentation::mul_gen(ExpVector& e, int g, Exp x, std::vector<Frame>& stack) const {
  if (x == 0) return;
  auto push_word = [&stack](const PcWord* w, Exp reps) {
    if (w->empty() || reps == 0) return;
    stack.push_back({w, {0, 0}, 0, reps < 0 ? -reps : reps, reps < 0});
  };
  auto push_letter = [&stack](int gen, Exp exp) {
    if (exp != 0) stack.push_back({nullptr, {gen, exp}, 0, 1, false});
  };
  const auto G = static_cast<std::size_t>(g);
  const int cs = central_start_;
  if (g >= cs) {
    e[G] = checked_add(e[G], x);
    return;
  }
  const Exp ro = orders_[G];
  if (ro > 0 && (x < 0 || x >= ro)) {
    Exp r = mod_floor(x, ro);
    Exp q = (x - r) / ro;
    push_word(&power_[G], q);
    push_letter(g, r);
    return;
  }
  int top = -1;
  for (int j = cs - 1; j > g; --j)
    if (e[static_cast<std::size_t>(j)] != 0) {
      top = j;
      break;
    }
  if (top < 0) {
    e[G] = checked_add(e[G], x);
    if (ro > 0 && e[G] >= ro) {
      e[G] -= ro;
      push_word(&power_[G], 1);
    }
    return;
  }
  const Exp s = x > 0 ? 1 : -1;
  push_letter(g, x - s);
  const auto& table = s > 0 ? conj_ : conj_inv_;
  for (int j = top; j > g; --j) {
    Exp ej = e[static_cast<std::size_t>(j)];
    if (ej == 0) continue;
    const PcWord& c = table[idx(g, j)];
    if (c.empty())
      push_letter(j, ej);
    else
      push_word(&c, ej);
    e[static_cast<std::size_t>(j)] = 0;
  }
  e[G] = checked_add(e[G], s);
  if (ro > 0 && e[G] == ro) {
    e[G] = 0;
    push_word(&power_[G], 1);
  }
}

void PcPresentation::normalize_central(ExpVector& e) const {
  for (int j = central_start_; j < m_; ++j) {
    const auto J = static_cast<std::size_t>(j);
    const Exp ro = orders_[J];
    if (ro == 0 || (e[J] >= 0 && e[J] < ro)) continue;
    Exp r = mod_floor(e[J], ro);
    Exp q = (e[J] - r) / ro;
    e[J] = r;
    for (const auto& gp : power_[J]) {
      auto K = static_cast<std::size_t>(gp.gen);
      e[K] = checked_add(e[K], checked_mul(q, gp.exp));
    }
  }
}

void PcPresentation::multiply(ExpVector& e, const PcWord& w) const {
  if (e.size() != static_cast<std::size_t>(m_)) throw std::invalid_argument("exponent vector length");
  std::vector<Frame> stack;
  stack.reserve(32);
  for (const auto& gp : w)
    if (gp.gen < 0 || gp.gen >= m_) throw std::out_of_range("pc generator out of range");
  if (!w.empty()) stack.push_back({&w, {0, 0}, 0, 1, false});
  while (!stack.empty()) {
    Frame& f = stack.back();
    GenPower gp;
    if (f.word == nullptr) {
      gp = f.letter;
      stack.pop_back();
    } else {
      const PcWord& W = *f.word;
      if (f.pos == W.size()) {
        if (--f.reps == 0) {
          stack.pop_back();
          continue;
        }
        f.pos = 0;
      }
      if (f.inverse) {
        const auto& src = W[W.size() - 1 - f.pos];
        gp = {src.gen, -src.exp};
      } else {
        gp = W[f.pos];
      }
      ++f.pos;
    }
    mul_gen(e, gp.gen, gp.exp, stack);
  }
  normalize_central(e);
}

ExpVector PcPresentation::collect(const PcWord& w) const {
  ExpVector e = identity();
  multiply(e, w);
  return e;
}

ExpVector PcPresentation::product(const ExpVector& u, const ExpVector& v) const {
  ExpVector e = u;
  multiply(e, to_word(v));
  return e;
}

ExpVector PcPresentation::inverse(const ExpVector& u) const {
  ExpVector x = u;
  PcWord inv;
  for (int i = 0; i < m_; ++i) {
    const auto I = static_cast<std::size_t>(i);
    if (x[I] == 0) continue;
    Exp f = orders_[I] > 0 ? orders_[I] - x[I] : -x[I];
    multiply(x, PcWord{{i, f}});
    inv.push_back({i, f});
  }
  return collect(inv);
}

ExpVector PcPresentation::power(const ExpVector& u, Exp k) const {
  ExpVector base = k < 0 ? inverse(u) : u;
  if (k < 0) k = -k;
  ExpVector result = identity();
  while (k > 0) {
    if (k & 1) result = product(result, base);
    k >>= 1;
    if (k) base = product(base, base);
  }
  return result;
}

ExpVector PcPresentation::commutator(const ExpVector& u, const ExpVector& v) const {
  ExpVector e = inverse(u);
  multiply(e, to_word(inverse(v)));
  multiply(e, to_word(u));
  multiply(e, to_word(v));
  return e;
}

ExpVector PcPresentation::conjugate(const ExpVector& u, const ExpVector& t) const {
  ExpVector e = inverse(t);
  multiply(e, to_word(u));
  multiply(e, to_word(t));
  return e;
}

std::vector<ConsistencyViolation> PcPresentation::consistency_check() const {
  std::vector<ConsistencyViolation> out;
  const int cs = central_start_;
  auto report = [&](std::string test, ExpVector lhs, ExpVector rhs) {
    if (lhs != rhs) out.push_back({std::move(test), std::move(lhs), std::move(rhs)});
  };
  auto tag = [](const char* name, std::initializer_list<int> ids) {
    std::string s = name;
    s += '(';
    bool first = true;
    for (int i : ids) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
    return s + ')';
  };
  auto ro = [&](int g) { return orders_[static_cast<std::size_t>(g)]; };
  for (int i = 0; i < cs; ++i)
    for (int j = i + 1; j < cs; ++j)
      for (int k = j + 1; k < cs; ++k) {
        ExpVector lhs = collect({{k, 1}, {j, 1}});
        multiply(lhs, {{i, 1}});
        ExpVector rhs = collect({{k, 1}});
        multiply(rhs, to_word(collect({{j, 1}, {i, 1}})));
        report(tag("associativity", {k, j, i}), std::move(lhs), std::move(rhs));
      }
  for (int i = 0; i < cs; ++i) {
    for (int j = i + 1; j < cs; ++j) {
      if (ro(j) > 0) {
        ExpVector lhs = collect(power_[static_cast<std::size_t>(j)]);
        multiply(lhs, {{i, 1}});
        ExpVector rhs = collect({{j, ro(j) - 1}});
        multiply(rhs, to_word(collect({{j, 1}, {i, 1}})));
        report(tag("power-left", {j, i}), std::move(lhs), std::move(rhs));
      } else {
        ExpVector lhs = collect({{j, -1}});
        multiply(lhs, to_word(collect({{j, 1}, {i, 1}})));
        report(tag("inverse-left", {j, i}), std::move(lhs), collect({{i, 1}}));
        if (ro(i) == 0) {
          ExpVector l2 = collect({{j, -1}});
          multiply(l2, to_word(collect({{j, 1}, {i, -1}})));
          report(tag("inverse-both", {j, i}), std::move(l2), collect({{i, -1}}));
        }
      }
      if (ro(i) > 0) {
        ExpVector lhs = collect({{j, 1}, {i, ro(i) - 1}});
        multiply(lhs, {{i, 1}});
        ExpVector rhs = collect({{j, 1}});
        multiply(rhs, power_[static_cast<std::size_t>(i)]);
        report(tag("power-right", {j, i}), std::move(lhs), std::move(rhs));
      } else {
        ExpVector lhs = collect({{j, 1}, {i, -1}});
        multiply(lhs, {{i, 1}});
        report(tag("inverse-right", {j, i}), std::move(lhs), collect({{j, 1}}));
      }
    }
    if (ro(i) > 0) {
      ExpVector lhs = collect(power_[static_cast<std::size_t>(i)]);
      multiply(lhs, {{i, 1}});
      ExpVector rhs = collect({{i, 1}});
      multiply(rhs, power_[static_cast<std::size_t>(i)]);
      report(tag("power", {i}), std::move(lhs), std::move(rhs));
    }
  }
  return out;
}

BigInt PcPresentation::order() const {
  BigInt o = 1;
  for (Exp e : orders_) {
    if (e == 0) return 0;
    o *= static_cast<long>(e);
  }
  return o;
}

CentralQuotient quotient_by_central(const PcPresentation& P, int first, const Lattice& S) {
  const int m = P.size();
  if (first < 0 || first > m) throw std::out_of_range("central block start");
  if (first < P.central_start()) throw std::invalid_argument("quotient_by_central: S not central");
  const std::size_t k = static_cast<std::size_t>(m - first);
  if (S.ambient() != k) throw std::invalid_argument("quotient_by_central: lattice dimension");

  Lattice M = S;
  for (std::size_t c = 0; c < k; ++c) {
    int g = first + static_cast<int>(c);
    Exp ro = P.relative_order(g);
    if (ro == 0) continue;
    BigVector row(k);
    row[c] = static_cast<long>(ro);
    for (const auto& gp : P.power_rhs(g)) {
      if (gp.gen < first) throw std::invalid_argument("central power relation leaves central block");
      row[static_cast<std::size_t>(gp.gen - first)] -= static_cast<long>(gp.exp);
    }
    M.insert(std::move(row));
  }

  std::vector<int> gen_map(static_cast<std::size_t>(m), -1);
  for (int g = 0; g < first; ++g) gen_map[static_cast<std::size_t>(g)] = g;
  int next = first;
  std::vector<BigInt> pv(k);
  for (std::size_t c = 0; c < k; ++c) {
    pv[c] = M.pivot_value(c);
    if (pv[c] != 1) gen_map[static_cast<std::size_t>(first) + c] = next++;
  }

  // Central part of a normal word mapped through M.
  auto central_part = [&](const BigVector& v, PcWord& out) {
    BigVector r = M.reduce(v);
    for (std::size_t c = 0; c < k; ++c) {
      if (sgn(r[c]) == 0) continue;
      int ng = gen_map[static_cast<std::size_t>(first) + c];
      if (ng < 0) throw std::logic_error("quotient_by_central: residue on eliminated generator");
      out.push_back({ng, to_int64(r[c])});
    }
  };
  auto rewrite_word = [&](const PcWord& w) {
    PcWord out;
    BigVector v(k);
    for (const auto& gp : w) {
      if (gp.gen < first)
        out.push_back(gp);
      else
        v[static_cast<std::size_t>(gp.gen - first)] += static_cast<long>(gp.exp);
    }
    central_part(v, out);
    return out;
  };
  auto rewrite_vec = [&](const ExpVector& e) {
    ExpVector out(static_cast<std::size_t>(next), 0);
    for (const auto& gp : rewrite_word(to_word(e))) out[static_cast<std::size_t>(gp.gen)] = gp.exp;
    return out;
  };

  PcPresentation Q(next);
  for (int g = 0; g < first; ++g) {
    Q.set_power(g, P.relative_order(g), rewrite_word(P.power_rhs(g)));
    Q.set_weight(g, P.weight(g));
    Q.set_definition(g, P.definition(g));
  }
  for (int i = 0; i < first; ++i)
    for (int j = i + 1; j < first; ++j) {
      if (!P.conjugate_trivial(i, j)) Q.set_conjugate(i, j, rewrite_word(P.conjugate_rhs(i, j)));
      if (!P.conjugate_inverse_trivial(i, j))
        Q.set_conjugate_inverse(i, j, rewrite_word(P.conjugate_inverse_rhs(i, j)));
    }
  for (std::size_t c = 0; c < k; ++c) {
    int og = first + static_cast<int>(c);
    int ng = gen_map[static_cast<std::size_t>(og)];
    if (ng < 0) continue;
    Q.set_weight(ng, P.weight(og));
    Q.set_definition(ng, P.definition(og));
    if (pv[c] == 0) {
      Q.set_power(ng, 0, {});
      continue;
    }
    const BigVector& row = M.pivot_row(c);
    BigVector rest(k);
    for (std::size_t d = c + 1; d < k; ++d) rest[d] = -row[d];
    PcWord rhs;
    central_part(rest, rhs);
    Q.set_power(ng, to_int64(pv[c]), std::move(rhs));
  }
  std::vector<ExpVector> epi;
  for (const auto& img : P.epimorphism()) epi.push_back(rewrite_vec(img));
  Q.set_epimorphism(std::move(epi));
  return {std::move(Q), std::move(gen_map)};
}

}  // namespace lpg
