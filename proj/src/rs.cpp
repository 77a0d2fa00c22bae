#include "lpg/rs.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpg/budget.hpp"
#include "lpg/nq.hpp"

namespace lpg {

namespace {

Letter letter_of_column(std::size_t col) {
  Letter g = static_cast<Letter>(col / 2 + 1);
  return (col & 1) ? -g : g;
}

}  // namespace

SchreierData schreier(const CosetTable& table) {
  if (!table.complete() || !table.closed()) throw std::invalid_argument("schreier: table incomplete");
  const std::size_t m = table.size(), n = table.rank();
  SchreierData sd;
  sd.table = table;
  std::vector<std::optional<FreeWord>> tr(m + 1);
  tr[1] = FreeWord(n);
  std::vector<std::uint32_t> queue{1};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::uint32_t c = queue[q];
    for (std::size_t x = 0; x < table.columns(); ++x) {
      std::uint32_t d = table.get(c, x);
      if (tr[d]) continue;
      FreeWord w = *tr[c];
      w.push_back(letter_of_column(x));
      tr[d] = std::move(w);
      queue.push_back(d);
    }
  }
  for (std::size_t k = 1; k <= m; ++k) {
    if (!tr[k]) throw std::invalid_argument("schreier: table not transitive");
    sd.transversal.push_back(*tr[k]);
  }
  sd.letter_of.assign(m * n, 0);
  for (std::uint32_t k = 1; k <= m; ++k)
    for (std::size_t g = 1; g <= n; ++g) {
      std::uint32_t d = table.get(k, 2 * (g - 1));
      FreeWord s = sd.transversal[k - 1] * FreeWord::generator(n, static_cast<int>(g)) * invert(sd.transversal[d - 1]);
      if (s.is_identity()) continue;
      sd.schreier_gens.push_back(std::move(s));
      sd.labels.emplace_back(k, static_cast<int>(g));
      sd.letter_of[(k - 1) * n + (g - 1)] = static_cast<int>(sd.schreier_gens.size());
    }
  return sd;
}

FreeWord rewrite(const SchreierData& sd, const FreeWord& w, std::uint32_t at) {
  const std::size_t n = sd.table.rank();
  if (w.rank() != n) throw std::invalid_argument("rewrite: alphabet mismatch");
  if (at == 0 || at > sd.table.size()) throw std::out_of_range("rewrite: coset out of range");
  FreeWord out(sd.rank());
  std::uint32_t k = at;
  for (Letter x : w.letters()) {
    if (x > 0) {
      int s = sd.letter_of[(k - 1) * n + static_cast<std::size_t>(x - 1)];
      if (s) out.push_back(s);
      k = sd.table.get(k, CosetTable::column(x));
    } else {
      k = sd.table.get(k, CosetTable::column(x));
      int s = sd.letter_of[(k - 1) * n + static_cast<std::size_t>(-x - 1)];
      if (s) out.push_back(-s);
    }
  }
  return out;
}

std::uint32_t end_coset(const SchreierData& sd, const FreeWord& w, std::uint32_t at) {
  auto r = sd.table.trace(at, w);
  if (!r) throw std::invalid_argument("end_coset: undefined trace");
  return *r;
}

Alphabet schreier_alphabet(const SchreierData& sd, const Alphabet& parent) {
  std::vector<std::string> names;
  for (auto [k, g] : sd.labels) names.push_back(parent.name(static_cast<std::size_t>(g)) + "_" + std::to_string(k));
  return Alphabet(std::move(names));
}

namespace {

std::vector<FreeWord> rewrite_everywhere(const SchreierData& sd, const std::vector<FreeWord>& rels) {
  std::vector<FreeWord> out;
  for (std::uint32_t k = 1; k <= sd.table.size(); ++k)
    for (const auto& r : rels) {
      if (end_coset(sd, r, k) != k) throw std::invalid_argument("subgroup table violates a relator");
      out.push_back(rewrite(sd, r, k));
    }
  return out;
}

// Induced substitutions s -> t_k sigma(s) t_k^-1 for cosets k stabilized by sigma(U),
// chosen so that the cosets k.sigma(t_j) cover the whole table.
std::optional<std::vector<Substitution>> lift_substitution(const SchreierData& sd, const Substitution& sigma) {
  const std::uint32_t m = static_cast<std::uint32_t>(sd.table.size());
  std::vector<FreeWord> imgs;
  for (const auto& s : sd.schreier_gens) imgs.push_back(apply(sigma.map, s));
  std::vector<FreeWord> tr_imgs;
  for (const auto& t : sd.transversal) tr_imgs.push_back(apply(sigma.map, t));

  std::vector<std::uint32_t> admissible;
  for (std::uint32_t k = 1; k <= m; ++k) {
    bool ok = true;
    for (const auto& w : imgs)
      if (end_coset(sd, w, k) != k) {
        ok = false;
        break;
      }
    if (ok) admissible.push_back(k);
  }
  std::vector<std::vector<char>> reach;
  for (std::uint32_t k : admissible) {
    std::vector<char> hit(m + 1, 0);
    for (const auto& t : tr_imgs) hit[end_coset(sd, t, k)] = 1;
    reach.push_back(std::move(hit));
  }
  std::vector<char> covered(m + 1, 0);
  std::uint32_t left = m;
  std::vector<std::uint32_t> chosen;
  while (left > 0) {
    std::size_t best = admissible.size(), best_gain = 0;
    for (std::size_t a = 0; a < admissible.size(); ++a) {
      std::size_t gain = 0;
      for (std::uint32_t c = 1; c <= m; ++c) gain += reach[a][c] && !covered[c];
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    if (best == admissible.size()) return std::nullopt;
    chosen.push_back(admissible[best]);
    for (std::uint32_t c = 1; c <= m; ++c)
      if (reach[best][c] && !covered[c]) {
        covered[c] = 1;
        --left;
      }
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<Substitution> out;
  for (std::uint32_t k : chosen) {
    std::vector<FreeWord> images;
    for (const auto& w : imgs) images.push_back(rewrite(sd, w, k));
    out.push_back({sigma.name + "_" + std::to_string(k), FreeEndomorphism(std::move(images))});
  }
  return out;
}

}  // namespace

SubgroupLPresentation subgroup_lpresentation(const LPresentation& L, const CosetTable& table, int ell_approx) {
  SubgroupLPresentation out;
  out.sd = schreier(table);
  Alphabet Y = schreier_alphabet(out.sd, L.alphabet());
  if (L.invariant()) {
    std::vector<Substitution> subs;
    bool ok = true;
    for (const auto& s : L.substitutions()) {
      auto lifted = lift_substitution(out.sd, s);
      if (!lifted) {
        ok = false;
        break;
      }
      subs.insert(subs.end(), lifted->begin(), lifted->end());
    }
    if (ok) {
      out.L = LPresentation(Y, rewrite_everywhere(out.sd, L.fixed_relators()), std::move(subs),
                            rewrite_everywhere(out.sd, L.iterated_relators()), true);
      out.exact = true;
      out.message = "exact";
      return out;
    }
  }
  FinitePresentation fp = truncate(L, ell_approx);
  out.L = LPresentation(Y, rewrite_everywhere(out.sd, fp.relators), {}, {}, true);
  out.exact = false;
  out.message = "finite approximation from truncation depth " + std::to_string(ell_approx);
  return out;
}

SubgroupLPresentation subgroup_lpresentation(const LPresentation& L, const SubgroupRecord& rec, int ell_approx) {
  if (!rec.certified) throw std::invalid_argument("subgroup record is not certified");
  return subgroup_lpresentation(L, rec.table, ell_approx);
}

namespace {

std::optional<DerivedSubgroup> derived_from_lattice(const LPresentation& L, const Lattice& S, std::size_t max_index) {
  AbelianMap amap = cokernel_map(S);
  if (!amap.invariants.finite()) return std::nullopt;
  BigInt order = amap.invariants.order();
  if (order > BigInt(static_cast<unsigned long>(max_index))) return std::nullopt;
  const std::size_t N = to_int64(order), f = amap.orders.size(), n = L.rank();
  std::vector<long> radix;
  for (const auto& o : amap.orders) radix.push_back(to_int64(o));
  std::vector<std::vector<long>> img(n, std::vector<long>(f));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t j = 0; j < f; ++j) img[g][j] = to_int64(amap.images[g][j]);
  auto shift = [&](std::size_t e, std::size_t g, long sign) {
    std::size_t out = 0, mul = 1;
    for (std::size_t j = 0; j < f; ++j) {
      long digit = static_cast<long>(e % static_cast<std::size_t>(radix[j]));
      e /= static_cast<std::size_t>(radix[j]);
      long v = ((digit + sign * img[g][j]) % radix[j] + radix[j]) % radix[j];
      out += static_cast<std::size_t>(v) * mul;
      mul *= static_cast<std::size_t>(radix[j]);
    }
    return out;
  };
  CosetTable t(n, N);
  for (std::size_t e = 0; e < N; ++e)
    for (std::size_t g = 0; g < n; ++g) {
      t.set(e + 1, 2 * g, static_cast<std::uint32_t>(shift(e, g, 1) + 1));
      t.set(e + 1, 2 * g + 1, static_cast<std::uint32_t>(shift(e, g, -1) + 1));
    }
  t.set_status(TableStatus::complete);
  t.standardize();
  DerivedSubgroup ds{std::move(t), amap.invariants, {}};
  ds.certificate = check_induced(L, perm_rep(ds.table));
  if (!ds.certificate.holds) throw std::logic_error("abelianization map failed certification");
  return ds;
}

}  // namespace

std::optional<DerivedSubgroup> derived_subgroup(const LPresentation& L, std::size_t max_index) {
  return derived_from_lattice(L, abelian_relation_lattice(L), max_index);
}

DerivedSeries derived_series_sections(const LPresentation& L, int depth, const DerivedBudget& budget) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  Deadline dl(budget.max_seconds);
  DerivedSeries out;
  LPresentation cur = L;
  BigInt cumulative = 1;
  for (int level = 1; level <= depth; ++level) {
    Lattice S = abelian_relation_lattice(cur);
    AbelianInvariants inv = cokernel_invariants(S);
    out.sections.push_back(inv);
    out.ranks.push_back(cur.rank());
    if (!inv.finite()) {
      if (level < depth) {
        out.partial = true;
        out.message = "infinite section at level " + std::to_string(level);
      }
      break;
    }
    cumulative *= inv.order();
    out.cumulative_index.push_back(cumulative);
    if (level == depth) break;
    if (cumulative > BigInt(static_cast<unsigned long>(budget.max_cumulative_index))) {
      out.partial = true;
      out.message = "cumulative index bound reached after level " + std::to_string(level);
      break;
    }
    if (dl.expired()) {
      out.partial = true;
      out.message = "time limit reached after level " + std::to_string(level);
      break;
    }
    auto ds = derived_from_lattice(cur, S, budget.max_cumulative_index);
    if (!ds) {
      out.partial = true;
      out.message = "section too large at level " + std::to_string(level);
      break;
    }
    auto sub = subgroup_lpresentation(cur, ds->table);
    if (!sub.exact) out.exact = false;
    cur = std::move(sub.L);
  }
  return out;
}

}  // namespace lpg
