#include "lpg/nq.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace lpg {

namespace {

enum class TailKind { power = 0, conj = 1, conj_inv = 2, epi = 3 };

struct Tail {
  TailKind kind;
  int i;
  int j;
  bool candidate;
};

// Central extension of the class-c quotient by one free tail per non-defining relation.
struct Cover {
  PcPresentation H;
  int m = 0;
  std::vector<Tail> tails;
  std::size_t num_noncandidates = 0;
  std::vector<int> def_gen;       // free generator -> defining pc generator or -1
  std::vector<PcWord> x_img, x_inv;
};

Cover build_cover(const PcPresentation& P, int c, std::size_t n) {
  Cover cv;
  const int m = P.size();
  cv.m = m;
  cv.def_gen.assign(n, -1);
  std::set<std::pair<int, int>> defining;  // (j, i) with a_k = [a_j, a_i]
  for (int k = 0; k < m; ++k) {
    const auto& d = P.definition(k);
    if (d.kind == PcDefinition::Kind::image) cv.def_gen[static_cast<std::size_t>(d.a)] = k;
    else if (d.kind == PcDefinition::Kind::commutator) defining.insert({d.a, d.b});
    else throw std::logic_error("pc generator without definition");
  }
  std::vector<Tail> non, cand;
  for (int i = 0; i < m; ++i)
    if (P.relative_order(i) > 0) non.push_back({TailKind::power, i, -1, false});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (P.weight(i) + P.weight(j) > c + 1) continue;
      if (!defining.count({j, i})) {
        bool is_cand = P.weight(j) == c && P.weight(i) == 1;
        (is_cand ? cand : non).push_back({TailKind::conj, i, j, is_cand});
      }
      if (P.relative_order(i) == 0) non.push_back({TailKind::conj_inv, i, j, false});
    }
  for (std::size_t x = 0; x < n; ++x)
    if (cv.def_gen[x] < 0) (c == 0 ? cand : non).push_back({TailKind::epi, static_cast<int>(x), -1, c == 0});
  cv.num_noncandidates = non.size();
  cv.tails = std::move(non);
  cv.tails.insert(cv.tails.end(), cand.begin(), cand.end());

  const int T = static_cast<int>(cv.tails.size());
  std::map<std::tuple<int, int, int>, int> tail_of;
  for (int t = 0; t < T; ++t) {
    const auto& tl = cv.tails[static_cast<std::size_t>(t)];
    tail_of[{static_cast<int>(tl.kind), tl.i, tl.j}] = m + t;
  }
  auto find_tail = [&](TailKind k, int i, int j) {
    auto it = tail_of.find({static_cast<int>(k), i, j});
    return it == tail_of.end() ? -1 : it->second;
  };

  PcPresentation H(m + T);
  for (int g = 0; g < m; ++g) {
    H.set_weight(g, P.weight(g));
    H.set_definition(g, P.definition(g));
    if (P.relative_order(g) > 0) {
      PcWord rhs = P.power_rhs(g);
      rhs.push_back({find_tail(TailKind::power, g, -1), 1});
      H.set_power(g, P.relative_order(g), std::move(rhs));
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      PcWord rhs = P.conjugate_trivial(i, j) ? PcWord{{j, 1}} : P.conjugate_rhs(i, j);
      if (int t = find_tail(TailKind::conj, i, j); t >= 0) rhs.push_back({t, 1});
      H.set_conjugate(i, j, std::move(rhs));
      if (P.relative_order(i) == 0) {
        PcWord r2 = P.conjugate_inverse_trivial(i, j) ? PcWord{{j, 1}} : P.conjugate_inverse_rhs(i, j);
        if (int t = find_tail(TailKind::conj_inv, i, j); t >= 0) r2.push_back({t, 1});
        H.set_conjugate_inverse(i, j, std::move(r2));
      }
    }
  for (int t = 0; t < T; ++t) {
    const auto& tl = cv.tails[static_cast<std::size_t>(t)];
    H.set_weight(m + t, c + 1);
    H.set_definition(m + t, {PcDefinition::Kind::tail, static_cast<int>(tl.kind), tl.i, tl.j});
  }
  std::vector<ExpVector> epi;
  for (std::size_t x = 0; x < n; ++x) {
    ExpVector img = P.epimorphism().at(x);
    img.resize(static_cast<std::size_t>(m + T), 0);
    if (cv.def_gen[x] < 0) img[static_cast<std::size_t>(find_tail(TailKind::epi, static_cast<int>(x), -1))] = 1;
    epi.push_back(std::move(img));
  }
  H.set_epimorphism(std::move(epi));
  for (const auto& img : H.epimorphism()) {
    cv.x_img.push_back(to_word(img));
    cv.x_inv.push_back(to_word(H.inverse(img)));
  }
  cv.H = std::move(H);
  return cv;
}

ExpVector eval_word(const Cover& cv, const FreeWord& w) {
  ExpVector e = cv.H.identity();
  for (Letter x : w.letters()) cv.H.multiply(e, x > 0 ? cv.x_img[static_cast<std::size_t>(x - 1)] : cv.x_inv[static_cast<std::size_t>(-x - 1)]);
  return e;
}

std::vector<ExpVector> eval_slp(const PcPresentation& H, const std::vector<PcWord>& x_img,
                                const std::vector<PcWord>& x_inv, const Slp& s) {
  std::vector<ExpVector> vals;
  std::vector<PcWord> val_words, val_inv;
  vals.reserve(s.lines.size());
  for (const auto& line : s.lines) {
    ExpVector e = H.identity();
    for (const auto& [ref, ex] : line) {
      if (ex == 0) continue;
      const PcWord* fwd;
      const PcWord* inv;
      if (ref < 0) {
        fwd = &x_img[static_cast<std::size_t>(-ref - 1)];
        inv = &x_inv[static_cast<std::size_t>(-ref - 1)];
      } else {
        fwd = &val_words[static_cast<std::size_t>(ref)];
        inv = &val_inv[static_cast<std::size_t>(ref)];
      }
      const PcWord* w = ex > 0 ? fwd : inv;
      for (Exp r = 0; r < (ex > 0 ? ex : -ex); ++r) H.multiply(e, *w);
    }
    val_words.push_back(to_word(e));
    val_inv.push_back(to_word(H.inverse(e)));
    vals.push_back(std::move(e));
  }
  std::vector<ExpVector> out;
  for (int o : s.outputs) out.push_back(vals.at(static_cast<std::size_t>(o)));
  return out;
}

BigVector tail_part(const ExpVector& e, int m, const char* what) {
  for (int g = 0; g < m; ++g)
    if (e[static_cast<std::size_t>(g)] != 0)
      throw std::logic_error(std::string("nq: non-central value for ") + what);
  BigVector v(e.size() - static_cast<std::size_t>(m));
  for (std::size_t t = 0; t < v.size(); ++t) v[t] = static_cast<long>(e[static_cast<std::size_t>(m) + t]);
  return v;
}

// Coordinates of v in an echelon basis (exact).
BigVector coordinates(const IntMatrix& B, const std::vector<std::size_t>& piv, BigVector v) {
  BigVector z(piv.size());
  BigInt q;
  for (std::size_t a = 0; a < piv.size(); ++a) {
    const BigInt& x = v[piv[a]];
    if (sgn(x) == 0) continue;
    if (!mpz_divisible_p(x.get_mpz_t(), B(a, piv[a]).get_mpz_t()))
      throw std::logic_error("coordinates: vector not in lattice");
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), B(a, piv[a]).get_mpz_t());
    z[a] = q;
    for (std::size_t k = piv[a]; k < v.size(); ++k) v[k] -= q * B(a, k);
  }
  for (const auto& x : v)
    if (sgn(x) != 0) throw std::logic_error("coordinates: vector not in lattice");
  return z;
}

}  // namespace

ExpVector evaluate(const PcPresentation& P, const FreeWord& w) {
  ExpVector e = P.identity();
  for (Letter x : w.letters()) {
    const ExpVector& img = P.epimorphism().at(static_cast<std::size_t>(x < 0 ? -x - 1 : x - 1));
    P.multiply(e, to_word(x > 0 ? img : P.inverse(img)));
  }
  return e;
}

Slp pc_relators_slp(const PcPresentation& P, std::size_t rank) {
  Slp s;
  const int m = P.size();
  for (int k = 0; k < m; ++k) {
    const auto& d = P.definition(k);
    if (d.kind == PcDefinition::Kind::image)
      s.lines.push_back({{-d.a - 1, 1}});
    else if (d.kind == PcDefinition::Kind::commutator)
      s.lines.push_back({{d.a, -1}, {d.b, -1}, {d.a, 1}, {d.b, 1}});
    else
      throw std::invalid_argument("pc generator without definition");
  }
  auto append_inverse = [](std::vector<std::pair<int, Exp>>& line, const PcWord& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) line.emplace_back(it->gen, -it->exp);
  };
  auto emit = [&](std::vector<std::pair<int, Exp>> line) {
    s.outputs.push_back(static_cast<int>(s.lines.size()));
    s.lines.push_back(std::move(line));
  };
  for (int i = 0; i < m; ++i) {
    if (P.relative_order(i) > 0) {
      std::vector<std::pair<int, Exp>> line{{i, P.relative_order(i)}};
      append_inverse(line, P.power_rhs(i));
      emit(std::move(line));
    }
    for (int j = i + 1; j < m; ++j) {
      std::vector<std::pair<int, Exp>> line{{i, -1}, {j, 1}, {i, 1}};
      append_inverse(line, P.conjugate_trivial(i, j) ? PcWord{{j, 1}} : P.conjugate_rhs(i, j));
      emit(std::move(line));
      if (P.relative_order(i) == 0) {
        std::vector<std::pair<int, Exp>> l2{{i, 1}, {j, 1}, {i, -1}};
        append_inverse(l2, P.conjugate_inverse_trivial(i, j) ? PcWord{{j, 1}} : P.conjugate_inverse_rhs(i, j));
        emit(std::move(l2));
      }
    }
  }
  for (std::size_t x = 0; x < rank; ++x) {
    std::vector<std::pair<int, Exp>> line{{-static_cast<int>(x) - 1, -1}};
    for (const auto& gp : to_word(P.epimorphism().at(x))) line.emplace_back(gp.gen, gp.exp);
    emit(std::move(line));
  }
  return s;
}

NqEngine::NqEngine(LPresentation L, Slp extra) : L_(std::move(L)), extra_(std::move(extra)), P_(0) {
  if (!L_.invariant()) throw std::invalid_argument("NqEngine requires an invariant L-presentation");
  P_.set_epimorphism(std::vector<ExpVector>(L_.rank()));
}

NqEngine::Step NqEngine::extend(bool want_dwyer, const Deadline& deadline, std::size_t max_tails) {
  const std::size_t n = L_.rank();
  const int c = klass_;
  Cover cv = build_cover(P_, c, n);
  const int m = cv.m;
  const std::size_t T = cv.tails.size();
  if (max_tails && T > max_tails)
    throw BudgetExceeded("covering step at class " + std::to_string(c + 1) + " needs " + std::to_string(T) +
                         " tails (limit " + std::to_string(max_tails) + ")");
  const PcPresentation& H = cv.H;

  // Consistency relations among tails.
  Lattice C(T);
  std::vector<BigVector> consistency_rows;
  for (const auto& v : H.consistency_check()) {
    for (int g = 0; g < m; ++g)
      if (v.lhs[static_cast<std::size_t>(g)] != v.rhs[static_cast<std::size_t>(g)])
        throw std::logic_error("nq: quotient presentation inconsistent (" + v.test + ")");
    BigVector d(T);
    for (std::size_t t = 0; t < T; ++t)
      d[t] = static_cast<long>(v.lhs[static_cast<std::size_t>(m) + t] - v.rhs[static_cast<std::size_t>(m) + t]);
    if (C.insert(d)) consistency_rows.push_back(std::move(d));
  }
  if (deadline.expired()) throw BudgetExceeded("time limit during consistency checks");

  // Induced action of each substitution on the tails.
  std::vector<SparseMatrix> actions;
  for (const auto& sub : L_.substitutions()) {
    std::vector<ExpVector> sig(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const auto& d = H.definition(k);
      if (d.kind == PcDefinition::Kind::image)
        sig[static_cast<std::size_t>(k)] = eval_word(cv, sub.map.image(d.a + 1));
      else
        sig[static_cast<std::size_t>(k)] = H.commutator(sig[static_cast<std::size_t>(d.a)], sig[static_cast<std::size_t>(d.b)]);
    }
    auto apply_sig = [&](const PcWord& u) {
      ExpVector e = H.identity();
      for (const auto& gp : u) H.multiply(e, to_word(H.power(sig[static_cast<std::size_t>(gp.gen)], gp.exp)));
      return e;
    };
    SparseMatrix A;
    A.n = T;
    A.rows.resize(T);
    for (std::size_t t = 0; t < T; ++t) {
      const Tail& tl = cv.tails[t];
      ExpVector lhs, rhs;
      switch (tl.kind) {
        case TailKind::power:
          lhs = H.power(sig[static_cast<std::size_t>(tl.i)], P_.relative_order(tl.i));
          rhs = apply_sig(P_.power_rhs(tl.i));
          break;
        case TailKind::conj:
          lhs = H.conjugate(sig[static_cast<std::size_t>(tl.j)], sig[static_cast<std::size_t>(tl.i)]);
          rhs = apply_sig(P_.conjugate_trivial(tl.i, tl.j) ? PcWord{{tl.j, 1}} : P_.conjugate_rhs(tl.i, tl.j));
          break;
        case TailKind::conj_inv:
          lhs = H.conjugate(sig[static_cast<std::size_t>(tl.j)], H.inverse(sig[static_cast<std::size_t>(tl.i)]));
          rhs = apply_sig(P_.conjugate_inverse_trivial(tl.i, tl.j) ? PcWord{{tl.j, 1}}
                                                                   : P_.conjugate_inverse_rhs(tl.i, tl.j));
          break;
        case TailKind::epi:
          lhs = eval_word(cv, sub.map.image(tl.i + 1));
          rhs = apply_sig(to_word(P_.epimorphism().at(static_cast<std::size_t>(tl.i))));
          break;
      }
      ExpVector img = H.inverse(rhs);
      H.multiply(img, to_word(lhs));
      BigVector v = tail_part(img, m, "substitution image of a tail");
      for (std::size_t u = 0; u < T; ++u)
        if (sgn(v[u]) != 0) A.rows[t].emplace_back(u, v[u]);
    }
    actions.push_back(std::move(A));
  }
  if (deadline.expired()) throw BudgetExceeded("time limit while inducing substitutions");

  // Relator images, spun under the substitutions.
  std::vector<BigVector> seeds = consistency_rows;
  for (const auto& q : L_.fixed_relators()) seeds.push_back(tail_part(eval_word(cv, q), m, "fixed relator"));
  for (const auto& r : L_.iterated_relators()) seeds.push_back(tail_part(eval_word(cv, r), m, "iterated relator"));
  if (!extra_.outputs.empty())
    for (const auto& e : eval_slp(H, cv.x_img, cv.x_inv, extra_)) seeds.push_back(tail_part(e, m, "pulled-back relator"));
  Lattice S = spin_closure(seeds, actions, T);
  if (deadline.expired()) throw BudgetExceeded("time limit while spinning");

  for (std::size_t t = 0; t < cv.num_noncandidates; ++t)
    if (S.pivot_value(t) != 1) throw std::logic_error("nq: non-defining tail survives in the new layer");

  Step step;
  step.tails = T;
  step.section = cokernel_invariants(S);

  if (want_dwyer) {
    std::vector<BigVector> abgen(static_cast<std::size_t>(m), BigVector(n));
    for (int k = 0; k < m; ++k)
      if (H.definition(k).kind == PcDefinition::Kind::image)
        abgen[static_cast<std::size_t>(k)][static_cast<std::size_t>(H.definition(k).a)] = 1;
    auto ab_word = [&](const PcWord& u) {
      BigVector v(n);
      for (const auto& gp : u)
        for (std::size_t x = 0; x < n; ++x) v[x] += abgen[static_cast<std::size_t>(gp.gen)][x] * static_cast<long>(gp.exp);
      return v;
    };
    IntMatrix Aab(T, n);
    for (std::size_t t = 0; t < T; ++t) {
      const Tail& tl = cv.tails[t];
      BigVector lhs(n), rhs(n);
      switch (tl.kind) {
        case TailKind::power:
          for (std::size_t x = 0; x < n; ++x)
            lhs[x] = abgen[static_cast<std::size_t>(tl.i)][x] * static_cast<long>(P_.relative_order(tl.i));
          rhs = ab_word(P_.power_rhs(tl.i));
          break;
        case TailKind::conj:
          lhs = abgen[static_cast<std::size_t>(tl.j)];
          rhs = ab_word(P_.conjugate_trivial(tl.i, tl.j) ? PcWord{{tl.j, 1}} : P_.conjugate_rhs(tl.i, tl.j));
          break;
        case TailKind::conj_inv:
          lhs = abgen[static_cast<std::size_t>(tl.j)];
          rhs = ab_word(P_.conjugate_inverse_trivial(tl.i, tl.j) ? PcWord{{tl.j, 1}}
                                                                : P_.conjugate_inverse_rhs(tl.i, tl.j));
          break;
        case TailKind::epi:
          lhs[static_cast<std::size_t>(tl.i)] = 1;
          rhs = ab_word(to_word(P_.epimorphism().at(static_cast<std::size_t>(tl.i))));
          break;
      }
      for (std::size_t x = 0; x < n; ++x) Aab(t, x) = lhs[x] - rhs[x];
    }
    // (S cap ker ab) / C
    IntMatrix B = S.basis();
    IntMatrix W(B.rows(), n);
    for (std::size_t a = 0; a < B.rows(); ++a)
      for (std::size_t t = 0; t < T; ++t)
        if (sgn(B(a, t)) != 0)
          for (std::size_t x = 0; x < n; ++x) W(a, x) += B(a, t) * Aab(t, x);
    Lattice I(T);
    for (const auto& y : left_kernel(W)) {
      BigVector v(T);
      for (std::size_t a = 0; a < y.size(); ++a)
        if (sgn(y[a]) != 0)
          for (std::size_t t = 0; t < T; ++t) v[t] += y[a] * B(a, t);
      I.insert(std::move(v));
    }
    IntMatrix IB = I.basis();
    auto ipiv = I.pivots();
    IntMatrix CB = C.basis();
    IntMatrix Z(CB.rows(), ipiv.size());
    for (std::size_t r = 0; r < CB.rows(); ++r) {
      BigVector z = coordinates(IB, ipiv, CB.row(r));
      for (std::size_t a = 0; a < z.size(); ++a) Z(r, a) = z[a];
    }
    step.dwyer = snf(Z);
  }

  CentralQuotient cq = quotient_by_central(H, m, S);
  PcPresentation next = std::move(cq.P);
  for (std::size_t t = 0; t < T; ++t) {
    int g = cq.gen_map[static_cast<std::size_t>(m) + t];
    if (g < 0) continue;
    const Tail& tl = cv.tails[t];
    if (!tl.candidate) throw std::logic_error("nq: non-candidate tail became a generator");
    if (tl.kind == TailKind::epi)
      next.set_definition(g, {PcDefinition::Kind::image, tl.i, -1, -1});
    else
      next.set_definition(g, {PcDefinition::Kind::commutator, tl.j, tl.i, -1});
    next.set_weight(g, c + 1);
  }
  step.grew = next.size() > m;
  P_ = std::move(next);
  if (step.grew) ++klass_;
  return step;
}

Lattice abelian_relation_lattice(const LPresentation& L) {
  const std::size_t n = L.rank();
  auto abel = [n](const FreeWord& w) {
    BigVector v(n);
    for (Letter x : w.letters()) {
      if (x > 0) v[static_cast<std::size_t>(x - 1)] += 1;
      else v[static_cast<std::size_t>(-x - 1)] -= 1;
    }
    return v;
  };
  std::vector<BigVector> seeds;
  for (const auto& r : L.iterated_relators()) seeds.push_back(abel(r));
  std::vector<SparseMatrix> actions;
  for (const auto& s : L.substitutions()) {
    IntMatrix A(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      BigVector v = abel(s.map.image(static_cast<int>(x + 1)));
      for (std::size_t y = 0; y < n; ++y) A(x, y) = v[y];
    }
    actions.push_back(SparseMatrix::from_dense(A));
  }
  Lattice S = spin_closure(seeds, actions, n);
  for (const auto& q : L.fixed_relators()) S.insert(abel(q));
  return S;
}

AbelianInvariants abelian_quotient(const LPresentation& L) { return cokernel_invariants(abelian_relation_lattice(L)); }

namespace {

NilpotentQuotient run_engine(NqEngine& eng, int c, const NqBudget& budget, const Deadline& dl) {
  NilpotentQuotient res;
  for (int step = eng.klass(); step < c; ++step) {
    if (dl.expired()) {
      res.partial = true;
      res.message = "time limit reached at class " + std::to_string(eng.klass());
      break;
    }
    try {
      auto s = eng.extend(false, dl, budget.max_tails);
      if (!s.grew) {
        res.stabilized = true;
        break;
      }
      res.sections.push_back(s.section);
    } catch (const BudgetExceeded& e) {
      res.partial = true;
      res.message = e.what();
      break;
    }
  }
  res.P = eng.quotient();
  res.klass = eng.klass();
  return res;
}

}  // namespace

NilpotentQuotient nilpotent_quotient(const LPresentation& L, int c, const NqBudget& budget) {
  if (c < 1) throw std::invalid_argument("class must be positive");
  Deadline dl(budget.max_seconds);
  if (L.invariant()) {
    NqEngine eng(L);
    return run_engine(eng, c, budget, dl);
  }
  // Non-invariant: quotient of the ascending presentation, then impose Q as fixed relators.
  LPresentation H(L.alphabet(), {}, L.substitutions(), L.iterated_relators(), true);
  NqEngine eh(H);
  NilpotentQuotient qh = run_engine(eh, c, budget, dl);
  if (qh.partial) return qh;
  LPresentation G(L.alphabet(), L.fixed_relators(), {}, {}, true);
  NqEngine eg(G, pc_relators_slp(qh.P, L.rank()));
  return run_engine(eg, c, budget, dl);
}

std::optional<NilpotentQuotient> maximal_nilpotent_detect(const LPresentation& L, int c_max, const NqBudget& budget) {
  if (c_max < 1) throw std::invalid_argument("c_max must be positive");
  // One extra step decides whether the class-c_max layer is the last one.
  NilpotentQuotient q = nilpotent_quotient(L, c_max + 1, budget);
  if (q.stabilized && q.klass <= c_max) return q;
  return std::nullopt;
}

}  // namespace lpg
