#include "lpg/lcenum.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace lpg {

namespace {

using Perm = std::vector<std::uint32_t>;
using Images = std::vector<Perm>;  // one per generator

struct Action {
  const Images& fwd;
  Images inv;

  explicit Action(const Images& images) : fwd(images) {
    for (const auto& p : images) {
      Perm q(p.size());
      for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
      inv.push_back(std::move(q));
    }
  }

  std::uint32_t step(std::uint32_t pt, Letter x) const {
    return x > 0 ? fwd[static_cast<std::size_t>(x - 1)][pt] : inv[static_cast<std::size_t>(-x - 1)][pt];
  }

  Perm of(const FreeWord& w, std::size_t degree) const {
    Perm p(degree);
    for (std::uint32_t i = 0; i < degree; ++i) {
      std::uint32_t pt = i;
      for (Letter x : w.letters()) pt = step(pt, x);
      p[i] = pt;
    }
    return p;
  }

  bool kills(const FreeWord& w, std::size_t degree) const {
    for (std::uint32_t i = 0; i < degree; ++i) {
      std::uint32_t pt = i;
      for (Letter x : w.letters()) pt = step(pt, x);
      if (pt != i) return false;
    }
    return true;
  }
};

}  // namespace

InducedCertificate check_induced(const LPresentation& L, const PermRep& images) {
  if (images.perms.size() != L.rank()) throw std::invalid_argument("check_induced: one image per generator required");
  for (const auto& p : images.perms)
    if (p.size() != images.degree) throw std::invalid_argument("check_induced: image degree mismatch");
  const std::size_t deg = images.degree;
  InducedCertificate cert;

  {
    Action pi(images.perms);
    for (const auto& q : L.fixed_relators()) {
      ++cert.relators_checked;
      if (!pi.kills(q, deg)) {
        cert.witness = q;
        cert.witness_fixed = true;
        return cert;
      }
    }
  }

  std::map<Images, std::size_t> seen;
  std::vector<std::pair<Images, std::vector<int>>> closure;
  seen.emplace(images.perms, 0);
  closure.emplace_back(images.perms, std::vector<int>{});
  for (std::size_t k = 0; k < closure.size(); ++k) {
    Images cur = closure[k].first;
    std::vector<int> label = closure[k].second;
    Action psi(cur);
    for (const auto& r : L.iterated_relators()) {
      ++cert.relators_checked;
      if (!psi.kills(r, deg)) {
        cert.witness = r;
        cert.witness_label = label;
        cert.closure_size = closure.size();
        return cert;
      }
    }
    for (std::size_t s = 0; s < L.substitutions().size(); ++s) {
      const auto& sigma = L.substitutions()[s].map;
      Images next;
      next.reserve(L.rank());
      for (std::size_t g = 1; g <= L.rank(); ++g) next.push_back(psi.of(sigma.image(static_cast<int>(g)), deg));
      if (seen.count(next)) continue;
      seen.emplace(next, closure.size());
      // psi o sigma corresponds to label extended on the right
      std::vector<int> nl = label;
      nl.push_back(static_cast<int>(s));
      closure.emplace_back(std::move(next), std::move(nl));
    }
  }
  cert.closure_size = closure.size();
  cert.holds = true;
  return cert;
}

CertifiedIndex l_enumerate(const LPresentation& L, const std::vector<FreeWord>& subgens,
                           const EnumerationPolicy& policy) {
  if (policy.ell_start < 0 || policy.ell_max < policy.ell_start)
    throw std::invalid_argument("l_enumerate: bad truncation range");
  CertifiedIndex best;
  best.message = "no complete table within limits";
  CosetLimits limits = policy.limits;
  for (int ell = policy.ell_start; ell <= policy.ell_max; ++ell) {
    FinitePresentation fp = truncate(L, ell);
    CosetTable t = enumerate(fp, subgens, limits);
    if (!t.complete()) {
      limits.max_cosets *= 2;
      continue;
    }
    auto cert = check_induced(L, perm_rep(t));
    best.index = t.index();
    best.ell_used = ell;
    best.table = std::move(t);
    best.certificate = cert;
    if (cert.holds) {
      best.certified = true;
      best.message = "certified";
      return best;
    }
    best.message = "index of truncated cover only; not certified";
  }
  return best;
}

}  // namespace lpg
